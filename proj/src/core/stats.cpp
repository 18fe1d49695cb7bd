#include "stats.hpp"

#include <algorithm>

#include "codes.hpp"
#include "errors.hpp"
#include "mesh_pattern.hpp"
#include "parallel.hpp"

namespace meshperm {

namespace {

struct Extrema {
  std::vector<char> rl_min;  // 1-based
  std::vector<char> rl_max;
};

Extrema rl_extrema(const Permutation& p) {
  const int n = p.size();
  Extrema e{std::vector<char>(n + 1, 0), std::vector<char>(n + 1, 0)};
  int lo = n + 1, hi = 0;
  for (int i = n; i >= 1; --i) {
    if (p[i] < lo) {
      lo = p[i];
      e.rl_min[i] = 1;
    }
    if (p[i] > hi) {
      hi = p[i];
      e.rl_max[i] = 1;
    }
  }
  return e;
}

void check_index(int i, int lo, int hi) {
  if (i < lo || i > hi) {
    throw DomainError("pattern index " + std::to_string(i) + " outside " + std::to_string(lo) + ".." +
                      std::to_string(hi));
  }
}

void check_refined_index(int i) {
  if (i != 3 && i != 4 && i != 7 && i != 8) {
    throw DomainError("refined vectors exist for P3, P4, P7, P8 only");
  }
}

std::uint64_t count_p9(const Permutation& p) {
  const int n = p.size();
  const ActiveZone zone = active_zone(p);
  if (zone.empty()) return 0;
  const int a = zone.interval->first;
  const int last = p[n];
  std::uint64_t total = 0;
  int below_max = 0;  // largest earlier letter below sigma_n
  for (int j = 1; j < n; ++j) {
    const int y = p[j];
    if (y < last) {
      if (y >= a && below_max < y) ++total;
      below_max = std::max(below_max, y);
    }
  }
  return total;
}

std::uint64_t count_p10(const Permutation& p) {
  const int n = p.size();
  const ActiveZone zone = active_zone(p);
  if (zone.empty()) return 0;
  const int b = zone.interval->second;
  const int last = p[n];
  std::uint64_t total = 0;
  int above_min = n + 1;  // smallest earlier letter above sigma_n
  for (int j = 1; j < n; ++j) {
    const int y = p[j];
    if (y > last) {
      if (y <= b && above_min > y) ++total;
      above_min = std::min(above_min, y);
    }
  }
  return total;
}

// P11 and P12 fix z = sigma_n and x = the nearest letter left of y that is
// below sigma_n.
std::uint64_t count_p11_p12(const Permutation& p, bool descending_tail) {
  const int n = p.size();
  if (n < 3) return 0;
  const int z = p[n];
  std::uint64_t total = 0;
  for (int j = 2; j < n; ++j) {
    const int y = p[j];
    if (descending_tail ? y < z : y > z) continue;
    int k = j - 1;
    while (k >= 1 && p[k] > z) --k;
    if (k < 1) continue;
    const int x = p[k];
    if (!descending_tail) {
      // 123: x < y, nothing before y in (y, z).
      if (x > y) continue;
      bool clear = true;
      for (int l = 1; l < j && clear; ++l) clear = !(p[l] > y && p[l] < z);
      total += clear;
    } else {
      // 132: letters between x and y exceed y, nothing before x in (z, y).
      bool clear = true;
      for (int l = k + 1; l < j && clear; ++l) clear = p[l] > y;
      for (int l = 1; l < k && clear; ++l) clear = !(p[l] > z && p[l] < y);
      total += clear;
    }
  }
  return total;
}

}  // namespace

std::vector<ActivePair> active_pairs(const Permutation& p, int i) {
  check_index(i, 1, 8);
  const int n = p.size();
  const Extrema e = rl_extrema(p);
  const bool adjacent = i == 1 || i == 2 || i == 5 || i == 6;
  const bool rising = i == 1 || i == 3 || i == 5 || i == 7;
  std::vector<ActivePair> out;
  for (int j = 1; j < n; ++j) {
    if (rising) {
      if (!e.rl_min[j] || p[j] == 1) continue;
    } else if (!e.rl_max[j]) {
      continue;
    }
    // Between-letter bound: rising needs every letter before y below y,
    // falling needs every letter before y above y.
    int bound = rising ? 0 : n + 1;
    const int stop = adjacent ? j + 1 : n;
    for (int k = j + 1; k <= stop; ++k) {
      const int y = p[k];
      if (rising) {
        if (e.rl_max[k] && y > bound) out.push_back({p[j], y, j, k});
        bound = std::max(bound, y);
      } else {
        if (e.rl_min[k] && y > 1 && y < bound) out.push_back({p[j], y, j, k});
        bound = std::min(bound, y);
      }
    }
  }
  return out;
}

std::pair<std::uint64_t, std::uint64_t> p13_p14_fast(const Permutation& p) {
  const SubexceedantFunction code = lehmer(p);
  return {m0_set(code).size(), m1_set(code).size()};
}

std::uint64_t fast_count(const Permutation& p, int i) {
  check_index(i, 1, 14);
  if (i <= 8) return active_pairs(p, i).size();
  switch (i) {
    case 9: return count_p9(p);
    case 10: return count_p10(p);
    case 11: return count_p11_p12(p, false);
    case 12: return count_p11_p12(p, true);
    case 13: return p13_p14_fast(p).first;
    default: return p13_p14_fast(p).second;
  }
}

PatternVector refined_vector(const Permutation& p, int i) {
  check_refined_index(i);
  PatternVector out(static_cast<std::size_t>(std::max(p.size() - 2, 0)), 0);
  for (const ActivePair& pair : active_pairs(p, i)) {
    ++out[static_cast<std::size_t>(pair.position_y - pair.position_x - 1)];
  }
  return out;
}

MeshStats::MeshStats() {
  matchers_.reserve(14);
  for (int i = 1; i <= 14; ++i) matchers_.emplace_back(catalog("P" + std::to_string(i)));
}

std::uint64_t MeshStats::count(const Permutation& p, int i) {
  check_index(i, 1, 14);
  return matchers_[i - 1].count(p);
}

PatternVector MeshStats::refined_vector(const Permutation& p, int i) {
  check_refined_index(i);
  PatternVector out(static_cast<std::size_t>(std::max(p.size() - 2, 0)), 0);
  matchers_[i - 1].for_each(p, [&](std::span<const int> positions) {
    ++out[static_cast<std::size_t>(positions[2] - positions[1] - 1)];
    return true;
  });
  return out;
}

const StatValue& StatTuple::at(std::string_view name) const {
  for (const auto& [key, value] : entries) {
    if (key == name) return value;
  }
  throw DomainError("statistic '" + std::string(name) + "' not in tuple");
}

bool StatTuple::same_values(const StatTuple& other) const {
  if (entries.size() != other.entries.size()) return false;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].second != other.entries[i].second) return false;
  }
  return true;
}

StatTuple stat_tuple(const Permutation& p, std::span<const std::string> names, StatEngine engine) {
  std::unique_ptr<MeshStats> mesh;
  auto mesh_stats = [&]() -> MeshStats& {
    if (!mesh) mesh = std::make_unique<MeshStats>();
    return *mesh;
  };
  auto pattern_index = [](std::string_view digits) {
    int value = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') return 0;
      value = value * 10 + (c - '0');
    }
    return digits.empty() ? 0 : value;
  };

  StatTuple tuple;
  for (const std::string& name : names) {
    StatValue value;
    if (name == "lrmin") {
      value = static_cast<std::uint64_t>(lrmin(p));
    } else if (name.size() > 1 && name[0] == 'P' && pattern_index(name.substr(1)) >= 1 &&
               pattern_index(name.substr(1)) <= 14) {
      const int i = pattern_index(name.substr(1));
      value = engine == StatEngine::Fast ? fast_count(p, i) : mesh_stats().count(p, i);
    } else if (name == "vecP3" || name == "vecP4" || name == "vecP7" || name == "vecP8") {
      const int i = name[4] - '0';
      value = engine == StatEngine::Fast ? refined_vector(p, i) : mesh_stats().refined_vector(p, i);
    } else {
      throw DomainError("unknown statistic '" + name + "'");
    }
    tuple.entries.emplace_back(name, std::move(value));
  }
  return tuple;
}

Distribution joint_distribution(std::span<const MeshPattern> patterns, int n, int jobs) {
  if (patterns.empty()) throw DomainError("distribution needs at least one pattern");
  const std::vector<MeshPattern> owned(patterns.begin(), patterns.end());
  auto parts = map_rank_chunks<Distribution>(n, jobs, [&](RankRange range) {
    std::vector<Matcher> matchers(owned.begin(), owned.end());
    Distribution local;
    std::vector<std::uint64_t> key(matchers.size());
    for_each_permutation(n, range, [&](const Permutation& sigma) {
      for (std::size_t i = 0; i < matchers.size(); ++i) key[i] = matchers[i].count(sigma);
      ++local[key];
    });
    return local;
  });
  Distribution total;
  for (const Distribution& part : parts) {
    for (const auto& [key, value] : part) total[key] += value;
  }
  return total;
}

}  // namespace meshperm
