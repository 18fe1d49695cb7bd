#include "permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "errors.hpp"

namespace meshperm {

BigInt factorial(int n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  BigInt result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt catalan(int n) {
  if (n < 0) throw DomainError("catalan of a negative number");
  return binomial(2 * n, n) / (n + 1);
}

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  std::vector<char> seen(n + 1, 0);
  for (int v : values_) {
    if (v < 1 || v > n) {
      throw InvalidInput("permutation entry " + std::to_string(v) +
                         " outside 1.." + std::to_string(n));
    }
    if (seen[v]) {
      throw InvalidInput("permutation entry " + std::to_string(v) + " repeated");
    }
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw DomainError("negative permutation length");
  std::vector<int> values(n);
  std::iota(values.begin(), values.end(), 1);
  return Permutation(std::move(values), Unchecked{});
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  const bool comma_form = text.find(',') != std::string_view::npos;
  if (!comma_form) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char c = text[i];
      if (is_space(c)) continue;
      if (c < '1' || c > '9') {
        throw ParseError(std::string("unexpected character '") + c + "' in permutation", i);
      }
      values.push_back(c - '0');
    }
  } else {
    std::size_t i = 0;
    while (true) {
      while (i < text.size() && is_space(text[i])) ++i;
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc()) throw ParseError("expected an integer in permutation", i);
      values.push_back(value);
      i = static_cast<std::size_t>(ptr - text.data());
      while (i < text.size() && is_space(text[i])) ++i;
      if (i == text.size()) break;
      if (text[i] != ',') {
        throw ParseError(std::string("unexpected character '") + text[i] + "' in permutation", i);
      }
      ++i;
    }
  }
  return Permutation(std::move(values));
}

int Permutation::position_of(int value) const {
  auto it = std::find(values_.begin(), values_.end(), value);
  if (it == values_.end()) throw InvalidInput("value not present in permutation");
  return static_cast<int>(it - values_.begin()) + 1;
}

std::string Permutation::to_string() const {
  if (size() > 9) return to_comma_string();
  std::string out;
  out.reserve(values_.size());
  for (int v : values_) out.push_back(static_cast<char>('0' + v));
  return out;
}

std::string Permutation::to_comma_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(values_[i]);
  }
  return out;
}

std::vector<int> generalized_complement(std::span<const int> sequence) {
  std::vector<int> sorted(sequence.begin(), sequence.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidInput("complement needs pairwise distinct entries");
  }
  if (!sorted.empty() && sorted.front() < 1) {
    throw InvalidInput("complement needs positive entries");
  }
  const std::size_t m = sorted.size();
  std::vector<int> out(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto j = static_cast<std::size_t>(
        std::lower_bound(sorted.begin(), sorted.end(), sequence[i]) - sorted.begin());
    out[i] = sorted[m - 1 - j];
  }
  return out;
}

Permutation reverse(const Permutation& p) {
  std::vector<int> values(p.values().rbegin(), p.values().rend());
  return Permutation(std::move(values));
}

Permutation complement(const Permutation& p) {
  return Permutation(generalized_complement(p.values()));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> values(p.size());
  for (int i = 1; i <= p.size(); ++i) values[p[i] - 1] = i;
  return Permutation(std::move(values));
}

namespace {

template <class Better>
std::vector<int> scan_left(const Permutation& p, Better better) {
  std::vector<int> positions;
  for (int i = 1; i <= p.size(); ++i) {
    if (positions.empty() || better(p[i], p[positions.back()])) positions.push_back(i);
  }
  return positions;
}

template <class Better>
std::vector<int> scan_right(const Permutation& p, Better better) {
  std::vector<int> positions;
  for (int i = p.size(); i >= 1; --i) {
    if (positions.empty() || better(p[i], p[positions.back()])) positions.push_back(i);
  }
  std::reverse(positions.begin(), positions.end());
  return positions;
}

}  // namespace

std::vector<int> left_to_right_minima(const Permutation& p) { return scan_left(p, std::less<>{}); }
std::vector<int> left_to_right_maxima(const Permutation& p) { return scan_left(p, std::greater<>{}); }
std::vector<int> right_to_left_minima(const Permutation& p) { return scan_right(p, std::less<>{}); }
std::vector<int> right_to_left_maxima(const Permutation& p) { return scan_right(p, std::greater<>{}); }

int lrmin(const Permutation& p) {
  int count = 0;
  int best = p.size() + 1;
  for (int v : p.values()) {
    if (v < best) {
      best = v;
      ++count;
    }
  }
  return count;
}

std::uint64_t factorial_u64(int n) {
  if (n < 0 || n > 20) throw DomainError("n! does not fit 64 bits for n = " + std::to_string(n));
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

Permutation unrank(int n, std::uint64_t r) {
  if (r >= factorial_u64(n)) throw DomainError("rank out of range");
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> values;
  values.reserve(n);
  for (int i = n; i >= 1; --i) {
    const std::uint64_t block = factorial_u64(i - 1);
    const auto index = static_cast<std::size_t>(r / block);
    r %= block;
    values.push_back(pool[index]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(index));
  }
  return Permutation(std::move(values));
}

std::uint64_t rank(const Permutation& p) {
  const int n = p.size();
  std::uint64_t r = 0;
  for (int i = 1; i <= n; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j <= n; ++j) smaller_after += p[j] < p[i];
    r += static_cast<std::uint64_t>(smaller_after) * factorial_u64(n - i);
  }
  return r;
}

std::vector<RankRange> split_ranks(int n, int chunks) {
  const std::uint64_t total = factorial_u64(n);
  const auto count = static_cast<std::uint64_t>(std::max(1, chunks));
  const std::uint64_t parts = std::min(count, total);
  std::vector<RankRange> out;
  out.reserve(parts);
  std::uint64_t begin = 0;
  for (std::uint64_t i = 0; i < parts; ++i) {
    const std::uint64_t end = total * (i + 1) / parts;
    out.push_back({begin, end});
    begin = end;
  }
  return out;
}

PermutationCursor::PermutationCursor(int n, RankRange range)
    : current_(range.size() ? unrank(n, range.begin) : Permutation::identity(n)),
      rank_(range.begin),
      remaining_(range.size()) {
  if (range.end > factorial_u64(n) || range.begin > range.end) {
    throw DomainError("rank range outside S_n");
  }
}

PermutationCursor::PermutationCursor(int n) : PermutationCursor(n, RankRange{0, factorial_u64(n)}) {}

void PermutationCursor::advance() {
  if (remaining_ == 0) return;
  --remaining_;
  ++rank_;
  if (remaining_) std::next_permutation(current_.values_.begin(), current_.values_.end());
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(factorial_u64(n)));
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

}  // namespace meshperm
