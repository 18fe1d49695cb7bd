#include "matcher.hpp"

#include <algorithm>

namespace meshperm {

Matcher::Matcher(MeshPattern pattern) : pattern_(std::move(pattern)) {
  m_ = pattern_.length();
  const Permutation& pi = pattern_.underlying();
  pattern_values_.assign(pi.values().begin(), pi.values().end());
  pattern_inverse_.assign(m_ + 2, 0);
  for (int d = 1; d <= m_; ++d) pattern_inverse_[pi[d]] = d;

  lower_neighbor_.assign(m_ + 1, -1);
  upper_neighbor_.assign(m_ + 1, -1);
  for (int d = 1; d <= m_; ++d) {
    for (int e = 1; e < d; ++e) {
      if (pi[e] < pi[d] && (lower_neighbor_[d] < 0 || pi[e] > pi[lower_neighbor_[d]])) lower_neighbor_[d] = e;
      if (pi[e] > pi[d] && (upper_neighbor_[d] < 0 || pi[e] < pi[upper_neighbor_[d]])) upper_neighbor_[d] = e;
    }
  }

  // A cell is decidable once the positions bounding its column and the
  // occurrence points bounding its row have been placed.
  checks_by_depth_.assign(m_ + 1, {});
  for (const Cell& c : pattern_.shading()) {
    int ready = 0;
    if (c.col >= 1) ready = std::max(ready, c.col);
    if (c.col + 1 <= m_) ready = std::max(ready, c.col + 1);
    if (c.row >= 1) ready = std::max(ready, pattern_inverse_[c.row]);
    if (c.row + 1 <= m_) ready = std::max(ready, pattern_inverse_[c.row + 1]);
    checks_by_depth_[ready].push_back({c.col, c.row});
  }
}

void Matcher::load(const Permutation& host) {
  host_ = &host;
  n_ = host.size();
  const int side = n_ + 1;
  prefix_.assign(static_cast<std::size_t>(side) * side, 0);
  for (int x = 1; x <= n_; ++x) {
    int* row = prefix_.data() + static_cast<std::ptrdiff_t>(x) * side;
    const int* above = row - side;
    const int v = host[x];
    for (int y = 0; y <= n_; ++y) row[y] = above[y] + (y >= v ? 1 : 0);
  }
  chosen_.assign(m_ + 2, 0);
  chosen_[m_ + 1] = n_ + 1;
  value_at_rank_.assign(m_ + 2, 0);
  value_at_rank_[m_ + 1] = n_ + 1;
}

bool Matcher::region_empty(int col, int row) const {
  const int x1 = chosen_[col];
  const int x2 = chosen_[col + 1] - 1;
  const int y1 = value_at_rank_[row];
  const int y2 = value_at_rank_[row + 1] - 1;
  if (x2 <= x1 || y2 <= y1) return true;
  const int side = n_ + 1;
  auto at = [&](int x, int y) { return prefix_[static_cast<std::size_t>(x) * side + y]; };
  return at(x2, y2) - at(x1, y2) - at(x2, y1) + at(x1, y1) == 0;
}

std::uint64_t Matcher::count(const Permutation& host) {
  std::uint64_t total = 0;
  for_each(host, [&](std::span<const int>) {
    ++total;
    return true;
  });
  return total;
}

bool Matcher::contains(const Permutation& host) {
  bool found = false;
  for_each(host, [&](std::span<const int>) {
    found = true;
    return false;
  });
  return found;
}

std::vector<Occurrence> Matcher::occurrences(const Permutation& host) {
  std::vector<Occurrence> out;
  for_each(host, [&](std::span<const int> positions) {
    Occurrence occ;
    occ.positions.assign(positions.begin(), positions.end());
    for (int p : positions) occ.values.push_back(host[p]);
    out.push_back(std::move(occ));
    return true;
  });
  return out;
}

std::vector<Occurrence> occurrences(const Permutation& host, const MeshPattern& p) {
  return Matcher(p).occurrences(host);
}

std::uint64_t count(const Permutation& host, const MeshPattern& p) { return Matcher(p).count(host); }

bool avoids(const Permutation& host, std::span<const MeshPattern> patterns) {
  return AvoidanceFilter(patterns).avoids(host);
}

AvoidanceFilter::AvoidanceFilter(std::span<const MeshPattern> patterns) {
  matchers_.reserve(patterns.size());
  for (const MeshPattern& p : patterns) matchers_.emplace_back(p);
}

bool AvoidanceFilter::avoids(const Permutation& host) {
  for (Matcher& m : matchers_) {
    if (m.contains(host)) return false;
  }
  return true;
}

}  // namespace meshperm
