#pragma once

// Reference implementations used only by the tests. They follow the
// definitions literally and share no code with the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Word = std::vector<int>;
using Shading = std::set<std::pair<int, int>>;

inline std::vector<Word> permutations(int n) {
  Word w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Word> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline bool order_isomorphic(const Word& a, const Word& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if ((a[i] < a[j]) != (b[i] < b[j])) return false;
    }
  }
  return true;
}

// Value tuples (in position order) of every occurrence of (pattern, shading)
// in host, by trying all position subsets. A shaded box (j,k) must hold no
// host point strictly inside the rectangle bounded by the j-th and (j+1)-th
// chosen positions and the k-th and (k+1)-th smallest chosen values, with 0
// and n+1 as outer bounds.
inline std::vector<Word> occurrences(const Word& host, const Word& pattern, const Shading& shading) {
  const int n = static_cast<int>(host.size());
  const int m = static_cast<int>(pattern.size());
  std::vector<Word> found;
  if (m > n) return found;
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + m, true);
  std::vector<Word> all;
  do {
    Word positions;
    for (int i = 0; i < n; ++i) {
      if (pick[static_cast<std::size_t>(i)]) positions.push_back(i + 1);
    }
    Word values;
    for (int p : positions) values.push_back(host[static_cast<std::size_t>(p - 1)]);
    if (!order_isomorphic(values, pattern)) continue;
    Word sorted = values;
    std::sort(sorted.begin(), sorted.end());
    Word xs{0}, ys{0};
    xs.insert(xs.end(), positions.begin(), positions.end());
    ys.insert(ys.end(), sorted.begin(), sorted.end());
    xs.push_back(n + 1);
    ys.push_back(n + 1);
    bool ok = true;
    for (const auto& [j, k] : shading) {
      for (int pos = 1; pos <= n && ok; ++pos) {
        const int v = host[static_cast<std::size_t>(pos - 1)];
        if (xs[j] < pos && pos < xs[j + 1] && ys[k] < v && v < ys[k + 1]) ok = false;
      }
    }
    if (ok) all.push_back(positions);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(all.begin(), all.end());
  for (const Word& positions : all) {
    Word values;
    for (int p : positions) values.push_back(host[static_cast<std::size_t>(p - 1)]);
    found.push_back(values);
  }
  return found;
}

inline std::uint64_t count(const Word& host, const Word& pattern, const Shading& shading) {
  return occurrences(host, pattern, shading).size();
}

// e_i = #{ j > i : w_j < w_i }.
inline Word lehmer(const Word& w) {
  Word e(w.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) e[i] += w[j] < w[i] ? 1 : 0;
  }
  return e;
}

// Largest value goes where the smallest was, and so on.
inline Word kappa(const Word& a) {
  Word sorted = a;
  std::sort(sorted.begin(), sorted.end());
  Word out;
  for (int x : a) {
    const auto j = std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin();
    out.push_back(sorted[sorted.size() - 1 - static_cast<std::size_t>(j)]);
  }
  return out;
}

// sigma' 1 sigma'' -> sigma' 1 kappa(sigma'').
inline Word phi(const Word& w) {
  const auto one = std::find(w.begin(), w.end(), 1);
  Word out(w.begin(), one + 1);
  const Word tail = kappa(Word(one + 1, w.end()));
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

inline std::uint64_t catalan(int n) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = 0; j < i; ++j) c[i] += c[j] * c[i - 1 - j];
  }
  return c[n];
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// Shadings of the fourteen catalog patterns: P_odd on 123, P_even on 132.
inline Shading catalog_shading(int i) {
  static const std::vector<Shading> table{
      {{0, 0}, {0, 1}, {2, 0}, {2, 1}, {2, 2}, {2, 3}, {3, 0}, {3, 1}, {3, 3}},
      {{0, 0}, {0, 1}, {2, 0}, {2, 1}, {2, 3}, {3, 0}, {3, 1}, {3, 3}},
      {{1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}, {2, 3}, {3, 0}, {3, 1}, {3, 3}},
      {{1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 3}, {3, 0}, {3, 1}, {3, 3}},
      {{0, 1}, {0, 2}, {1, 1}, {1, 2}, {3, 0}, {3, 1}, {3, 2}, {3, 3}},
      {{1, 0}, {0, 2}, {1, 1}, {1, 2}, {3, 0}, {3, 1}, {3, 2}, {3, 3}},
      {{1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}, {3, 0}, {3, 1}, {3, 2}},
  };
  return table[static_cast<std::size_t>((i - 1) / 2)];
}

inline Word catalog_word(int i) { return i % 2 == 1 ? Word{1, 2, 3} : Word{1, 3, 2}; }

}  // namespace oracle
