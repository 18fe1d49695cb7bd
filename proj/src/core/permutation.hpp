#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bigint.hpp"

namespace meshperm {

// A permutation of [n] in one-line notation. Values and positions are
// 1-based: operator[](i) is sigma_i for 1 <= i <= n. The default-constructed
// object is the empty permutation.
class Permutation {
 public:
  Permutation() = default;

  // Throws InvalidInput unless `values` is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values)
      : Permutation(std::vector<int>(values)) {}

  static Permutation identity(int n);

  // Accepts the digit form ("461928753") and the comma form
  // ("13,15,4,..."). Whitespace around entries is ignored.
  static Permutation parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  bool empty() const noexcept { return values_.empty(); }
  int operator[](int position) const noexcept { return values_[position - 1]; }
  std::span<const int> values() const noexcept { return values_; }

  // 1-based position of `value`.
  int position_of(int value) const;

  // Digit string for n <= 9, comma-separated otherwise.
  std::string to_string() const;
  std::string to_comma_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.values_ <=> b.values_;
  }

 private:
  friend class PermutationCursor;
  struct Unchecked {};
  Permutation(std::vector<int> values, Unchecked) : values_(std::move(values)) {}

  std::vector<int> values_;
};

// kappa: order-reversing rearrangement of a sequence of distinct positive
// integers within its own value set. Throws InvalidInput on duplicates or
// non-positive entries.
std::vector<int> generalized_complement(std::span<const int> sequence);

Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);
Permutation inverse(const Permutation& p);

// Sorted 1-based positions of the respective extremal entries.
std::vector<int> left_to_right_minima(const Permutation& p);
std::vector<int> left_to_right_maxima(const Permutation& p);
std::vector<int> right_to_left_minima(const Permutation& p);
std::vector<int> right_to_left_maxima(const Permutation& p);

// Number of left-to-right minima (the Stirling statistic).
int lrmin(const Permutation& p);

// ---- Iteration over S_n in lexicographic order ----------------------------

// Half-open range of lexicographic ranks.
struct RankRange {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
  std::uint64_t size() const noexcept { return end - begin; }
};

// n! as a 64-bit value; DomainError for n > 20.
std::uint64_t factorial_u64(int n);

// The permutation of lexicographic rank `rank` in S_n.
Permutation unrank(int n, std::uint64_t rank);
std::uint64_t rank(const Permutation& p);

// Splits [0, n!) into at most `chunks` contiguous, nonempty, ordered ranges.
std::vector<RankRange> split_ranks(int n, int chunks);

// Walks a rank range of S_n in place. The cursor owns a single Permutation
// that is rearranged on each advance(), so the hot loop does not allocate.
class PermutationCursor {
 public:
  PermutationCursor(int n, RankRange range);
  explicit PermutationCursor(int n);

  bool done() const noexcept { return remaining_ == 0; }
  const Permutation& current() const noexcept { return current_; }
  std::uint64_t rank() const noexcept { return rank_; }
  void advance();

 private:
  Permutation current_;
  std::uint64_t rank_;
  std::uint64_t remaining_;
};

template <class Fn>
void for_each_permutation(int n, RankRange range, Fn&& fn) {
  for (PermutationCursor cursor(n, range); !cursor.done(); cursor.advance()) {
    fn(cursor.current());
  }
}

template <class Fn>
void for_each_permutation(int n, Fn&& fn) {
  for_each_permutation(n, RankRange{0, factorial_u64(n)}, std::forward<Fn>(fn));
}

std::vector<Permutation> all_permutations(int n);

}  // namespace meshperm
