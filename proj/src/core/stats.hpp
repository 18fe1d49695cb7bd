#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "matcher.hpp"
#include "permutation.hpp"

namespace meshperm {

// Entry k counts occurrences (sigma_a, sigma_b, sigma_c) of P_i with
// c - b = k + 1, for k = 0..n-3. Empty for n < 3.
using PatternVector = std::vector<std::uint64_t>;

// Final two letters of some occurrence of P_i, i in 1..8.
struct ActivePair {
  int x = 0;
  int y = 0;
  int position_x = 0;
  int position_y = 0;
  friend bool operator==(const ActivePair&, const ActivePair&) = default;
};

// P_i-active pairs via the right-to-left extremum characterization:
//   i = 1,5  x = sigma_j > 1 rl-min, y = sigma_{j+1} rl-max
//   i = 3,7  x = sigma_j > 1 rl-min, y = sigma_k rl-max, j < k, and every
//            letter strictly between them lies in (x, y)
//   i = 2,6  x = sigma_j rl-max, y = sigma_{j+1} > 1 rl-min
//   i = 4,8  x = sigma_j rl-max, y = sigma_k > 1 rl-min, j < k, and every
//            letter strictly between them lies in (y, x)
// Ordered by (position_x, position_y). DomainError unless 1 <= i <= 8.
std::vector<ActivePair> active_pairs(const Permutation& p, int i);

// Characterization-based occurrence count of P_i, i in 1..14. Independent
// of the generic matcher:
//   P1-P8    number of active pairs
//   P9, P10  middle letters described through the active zone
//   P11, P12 middle letters with x taken as the nearest letter below sigma_n
//   P13, P14 |M0|, |M1| of the Lehmer code
std::uint64_t fast_count(const Permutation& p, int i);

// Refined vector of P_i, i in {3,4,7,8}, from active-pair gaps.
PatternVector refined_vector(const Permutation& p, int i);

// (|M0(L(p))|, |M1(L(p))|).
std::pair<std::uint64_t, std::uint64_t> p13_p14_fast(const Permutation& p);

// Generic-matcher route for the fourteen catalog patterns. Holds one
// Matcher per pattern; not thread-safe, use one per worker.
class MeshStats {
 public:
  MeshStats();
  std::uint64_t count(const Permutation& p, int i);
  // Refined vector of P_i, i in {3,4,7,8}, from matcher occurrences.
  PatternVector refined_vector(const Permutation& p, int i);

 private:
  std::vector<Matcher> matchers_;
};

enum class StatEngine { Mesh, Fast };

using StatValue = std::variant<std::uint64_t, PatternVector>;

// Named statistic values in request order.
struct StatTuple {
  std::vector<std::pair<std::string, StatValue>> entries;

  const StatValue& at(std::string_view name) const;
  // Positional comparison of the values, ignoring names.
  bool same_values(const StatTuple& other) const;
};

// Names: lrmin, P1..P14, vecP3, vecP4, vecP7, vecP8 (case-sensitive).
// DomainError on an unknown name.
StatTuple stat_tuple(const Permutation& p, std::span<const std::string> names,
                     StatEngine engine = StatEngine::Fast);

// Joint distribution of the occurrence counts of `patterns` over S_n:
// value tuple -> number of permutations.
using Distribution = std::map<std::vector<std::uint64_t>, std::uint64_t>;
Distribution joint_distribution(std::span<const MeshPattern> patterns, int n, int jobs = 1);

}  // namespace meshperm
