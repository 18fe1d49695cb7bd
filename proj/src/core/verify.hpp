#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "report.hpp"

namespace meshperm {

// One run request: a registered claim over an inclusive range of n, plus
// family sizes for the parametric claims.
struct ClaimSpec {
  std::string id;
  int n_min = 1;
  int n_max = 1;
  std::vector<int> params;
};

struct ClaimInfo {
  std::string id;
  std::string statement;
  int n_min = 1;
  int n_max = 1;  // release default; --max-n and MESHPERM_MAX_N clip it
  std::vector<int> params;
};

// Deliberately corrupts one statistic of the matcher route so that the
// harness can be shown to fail: the count of P_{pattern_index} (and entry 0
// of its refined vector) is increased by one on every permutation ending in
// 2. Zero disables it.
struct FaultInjection {
  int pattern_index = 0;
};

struct VerifyOptions {
  int max_n = 0;  // 0: no cap beyond the claim default
  int jobs = 1;
  FaultInjection fault;
};

// Registered claims, in run order.
const std::vector<ClaimInfo>& claim_registry();

// Registered id or alias -> canonical id. DomainError if unknown.
std::string resolve_claim_id(std::string_view id);

// Default spec of a registered claim (aliases accepted).
ClaimSpec default_spec(std::string_view id);

// Checks every n in the spec's range (after clipping by options.max_n and
// the MESHPERM_MAX_N environment variable) and stops at the first failure.
// The counterexample is the first failing n and, within it, the
// lexicographically least permutation, independent of options.jobs.
VerificationReport run_claim(const ClaimSpec& spec, const VerifyOptions& options = {});

// Every registered claim at its default range clipped to options.max_n.
// DomainError if options.max_n < 1.
std::vector<VerificationReport> run_all(const VerifyOptions& options);

// Effective upper bound after clipping, or the default when no cap applies.
int clipped_max_n(int n_max, const VerifyOptions& options);

}  // namespace meshperm
