#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permutation.hpp"

namespace meshperm {

// (s_1, ..., s_n) with 0 <= s_i <= n - i.
class SubexceedantFunction {
 public:
  SubexceedantFunction() = default;
  // Throws InvalidInput on a bound violation.
  explicit SubexceedantFunction(std::vector<int> entries);
  SubexceedantFunction(std::initializer_list<int> entries)
      : SubexceedantFunction(std::vector<int>(entries)) {}

  // "(2,3,1,0)"; the parentheses are optional on input.
  static SubexceedantFunction parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(entries_.size()); }
  int operator[](int index) const noexcept { return entries_[index - 1]; }  // 1-based
  std::span<const int> entries() const noexcept { return entries_; }
  std::string to_string() const;

  friend bool operator==(const SubexceedantFunction&, const SubexceedantFunction&) = default;

 private:
  std::vector<int> entries_;
};

// Value interval [low, high] on which psi complements, or nothing.
struct ActiveZone {
  std::optional<std::pair<int, int>> interval;

  bool empty() const noexcept { return !interval.has_value(); }
  bool contains(int value) const noexcept {
    return interval && interval->first <= value && value <= interval->second;
  }
  friend bool operator==(const ActiveZone&, const ActiveZone&) = default;
};

// sigma = sigma' 1 sigma''  ->  sigma' 1 kappa(sigma''). DomainError on the
// empty permutation.
Permutation phi(const Permutation& p);

// Empty iff sigma_n = 1 (and for the empty permutation). Otherwise
// a = sigma_j + 1 with j the leftmost position holding a value below sigma_n,
// and b = n if j = 1, else min{sigma_i : i < j} - 1.
ActiveZone active_zone(const Permutation& p);

// Complements the entries lying in the active zone within [a, b].
Permutation psi(const Permutation& p);

// s_i = #{j > i : sigma_j < sigma_i}.
SubexceedantFunction lehmer(const Permutation& p);
Permutation unlehmer(const SubexceedantFunction& code);

// 1-based indices j with s_j = 0 (resp. 1) lying strictly between the
// leftmost and rightmost zero of s.
std::vector<int> m0_set(const SubexceedantFunction& code);
std::vector<int> m1_set(const SubexceedantFunction& code);

// Swaps 0 <-> 1 on m0_set(s) U m1_set(s).
SubexceedantFunction theta_code(const SubexceedantFunction& code);

// unlehmer(theta_code(lehmer(p))).
Permutation big_theta(const Permutation& p);

enum class Involution { Phi, Psi, Theta };

// "phi" | "psi" | "theta", case-insensitive; DomainError otherwise.
Involution parse_involution(std::string_view name);
std::string_view involution_name(Involution which);
Permutation apply(Involution which, const Permutation& p);

}  // namespace meshperm
