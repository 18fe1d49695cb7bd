#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mesh_pattern.hpp"
#include "permutation.hpp"

namespace meshperm {

// One occurrence of a pattern in a host: strictly increasing 1-based
// positions and the host values at those positions.
struct Occurrence {
  std::vector<int> positions;
  std::vector<int> values;
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

// Occurrence search for a fixed mesh pattern.
//
// Candidates i_1 < ... < i_m are built left to right. Order-isomorphism is
// checked incrementally against the two nearest pattern values already
// placed, and each shaded cell is tested as soon as the four boundaries of
// its region are known. A cell (j,k) forbids host points strictly between
// positions i_j and i_{j+1} with values strictly between w_k and w_{k+1},
// where w is the sorted occurrence value set and i_0 = w_0 = 0,
// i_{m+1} = w_{m+1} = n+1. Emptiness is an O(1) lookup in a 2-D prefix-count
// table of the host.
//
// A Matcher keeps scratch buffers between calls; use one per thread.
class Matcher {
 public:
  explicit Matcher(MeshPattern pattern);

  const MeshPattern& pattern() const noexcept { return pattern_; }

  std::uint64_t count(const Permutation& host);
  bool contains(const Permutation& host);
  // Lexicographic in the position tuple.
  std::vector<Occurrence> occurrences(const Permutation& host);

  // Calls visit(positions) for each occurrence in lexicographic order;
  // `positions` is 1-based. Stops early when visit returns false.
  template <class Visit>
  void for_each(const Permutation& host, Visit&& visit);

 private:
  struct CellCheck {
    int col;
    int row;
  };

  void load(const Permutation& host);
  bool region_empty(int col, int row) const;
  template <class Visit>
  bool search(int depth, int first_position, Visit& visit);

  MeshPattern pattern_;
  int m_ = 0;
  std::vector<int> pattern_values_;   // pi_1..pi_m, 0-based index
  std::vector<int> pattern_inverse_;  // value -> depth (1-based), size m+1
  std::vector<int> lower_neighbor_;   // depth -> earlier depth with next smaller pi, or -1
  std::vector<int> upper_neighbor_;   // depth -> earlier depth with next larger pi, or -1
  std::vector<std::vector<CellCheck>> checks_by_depth_;  // index 1..m

  // Per-host state.
  const Permutation* host_ = nullptr;
  int n_ = 0;
  std::vector<int> prefix_;         // (n+1)x(n+1) counts, pos <= x and value <= y
  std::vector<int> chosen_;         // positions, 1..m; [0] = 0 sentinel
  std::vector<int> value_at_rank_;  // w_0..w_{m+1}
};

std::vector<Occurrence> occurrences(const Permutation& host, const MeshPattern& p);
std::uint64_t count(const Permutation& host, const MeshPattern& p);
bool avoids(const Permutation& host, std::span<const MeshPattern> patterns);

// Reusable avoidance test against a fixed list of patterns.
class AvoidanceFilter {
 public:
  explicit AvoidanceFilter(std::span<const MeshPattern> patterns);
  bool avoids(const Permutation& host);

 private:
  std::vector<Matcher> matchers_;
};

// ---- template implementation ----------------------------------------------

template <class Visit>
void Matcher::for_each(const Permutation& host, Visit&& visit) {
  load(host);
  if (m_ > n_) return;
  if (m_ == 0) {
    for (const auto& c : checks_by_depth_[0]) {
      if (!region_empty(c.col, c.row)) return;
    }
    visit(std::span<const int>{});
    return;
  }
  search(1, 1, visit);
}

template <class Visit>
bool Matcher::search(int depth, int first_position, Visit& visit) {
  const Permutation& host = *host_;
  const int last_position = n_ - (m_ - depth);
  const int lo_depth = lower_neighbor_[depth];
  const int hi_depth = upper_neighbor_[depth];
  const int lo = lo_depth < 0 ? 0 : host[chosen_[lo_depth]];
  const int hi = hi_depth < 0 ? n_ + 1 : host[chosen_[hi_depth]];
  const int rank = pattern_values_[depth - 1];
  for (int position = first_position; position <= last_position; ++position) {
    const int value = host[position];
    if (value <= lo || value >= hi) continue;
    chosen_[depth] = position;
    value_at_rank_[rank] = value;
    bool ok = true;
    for (const CellCheck& c : checks_by_depth_[depth]) {
      if (!region_empty(c.col, c.row)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (depth == m_) {
      if (!visit(std::span<const int>(chosen_.data() + 1, static_cast<std::size_t>(m_)))) return false;
    } else if (!search(depth + 1, position + 1, visit)) {
      return false;
    }
  }
  return true;
}

}  // namespace meshperm
