#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace meshperm {

// First witness against a claim. `permutation` is absent for claims that
// compare counts or polynomials rather than individual permutations.
struct Counterexample {
  int n = 0;
  std::optional<std::string> permutation;
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  std::string claim;
  std::string statement;  // the mathematical statement being checked
  int n_min = 0;
  int n_max = 0;
  std::vector<int> params;  // family sizes k, when the claim has them
  bool passed = true;
  std::optional<Counterexample> counterexample;
  // Per-n observed values for count-type claims, e.g. {8, "128"}.
  std::vector<std::pair<int, std::string>> observed;
  // Conventions the check relies on (S_0 = 1, |S_0| = 1, ...).
  std::vector<std::string> notes;
  double wall_time_ms = 0;
  int workers = 1;
};

}  // namespace meshperm
