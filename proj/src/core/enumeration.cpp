#include "enumeration.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "errors.hpp"
#include "matcher.hpp"
#include "parallel.hpp"

namespace meshperm {

namespace {

const MeshPattern& classical_132() {
  static const MeshPattern p(Permutation{1, 3, 2}, {});
  return p;
}

struct ChunkResult {
  std::uint64_t count = 0;
  std::vector<Permutation> members;
};

}  // namespace

std::vector<Permutation> avoiders_132(int n) {
  if (n < 0) throw DomainError("negative permutation length");
  // by_size[i] holds S_i(132) as raw value vectors.
  std::vector<std::vector<std::vector<int>>> by_size(n + 1);
  by_size[0] = {{}};
  for (int size = 1; size <= n; ++size) {
    auto& out = by_size[size];
    for (int left = 0; left < size; ++left) {
      const int right = size - 1 - left;
      const int shift = right;  // letters of sigma' sit above sigma''
      for (const auto& prefix : by_size[left]) {
        for (const auto& suffix : by_size[right]) {
          std::vector<int> values;
          values.reserve(size);
          for (int v : prefix) values.push_back(v + shift);
          values.push_back(size);
          values.insert(values.end(), suffix.begin(), suffix.end());
          out.push_back(std::move(values));
        }
      }
    }
  }
  std::vector<Permutation> result;
  result.reserve(by_size[n].size());
  for (auto& values : by_size[n]) result.emplace_back(std::move(values));
  std::sort(result.begin(), result.end());
  return result;
}

ClassResult enumerate_class(const AvoidanceQuery& query, int jobs) {
  if (query.n < 0) throw DomainError("negative permutation length");
  const int n = query.n;
  ClassResult result;
  result.n = n;

  const bool has_132 = std::find(query.patterns.begin(), query.patterns.end(), classical_132()) !=
                       query.patterns.end();
  std::vector<ChunkResult> parts;
  if (has_132) {
    const std::vector<Permutation> candidates = avoiders_132(n);
    std::vector<MeshPattern> rest;
    for (const MeshPattern& p : query.patterns) {
      if (!(p == classical_132())) rest.push_back(p);
    }
    const std::size_t chunk_count = jobs <= 1 ? 1 : static_cast<std::size_t>(jobs) * kChunksPerWorker;
    const std::size_t total = candidates.size();
    parts = run_indexed<ChunkResult>(std::min(chunk_count, std::max<std::size_t>(total, 1)), jobs,
                                     [&](std::size_t i) {
      const std::size_t chunks = std::min(chunk_count, std::max<std::size_t>(total, 1));
      const std::size_t begin = total * i / chunks;
      const std::size_t end = total * (i + 1) / chunks;
      AvoidanceFilter filter(rest);
      ChunkResult local;
      for (std::size_t c = begin; c < end; ++c) {
        if (filter.avoids(candidates[c])) {
          ++local.count;
          if (query.want_list) local.members.push_back(candidates[c]);
        }
      }
      return local;
    });
  } else {
    parts = map_rank_chunks<ChunkResult>(n, jobs, [&](RankRange range) {
      AvoidanceFilter filter(query.patterns);
      ChunkResult local;
      for_each_permutation(n, range, [&](const Permutation& sigma) {
        if (filter.avoids(sigma)) {
          ++local.count;
          if (query.want_list) local.members.push_back(sigma);
        }
      });
      return local;
    });
  }

  if (query.want_list) result.members.emplace();
  for (ChunkResult& part : parts) {
    result.count += part.count;
    if (query.want_list) {
      result.members->insert(result.members->end(), std::make_move_iterator(part.members.begin()),
                             std::make_move_iterator(part.members.end()));
    }
  }
  return result;
}

std::vector<Permutation> rotation_class(int n) {
  std::vector<Permutation> out;
  for (int a = 2; a <= n; ++a) {
    std::vector<int> values;
    for (int v = a; v <= n; ++v) values.push_back(v);
    for (int v = 1; v < a; ++v) values.push_back(v);
    out.emplace_back(std::move(values));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool check_ad3_structure(int n, int jobs) {
  if (n < 2) throw DomainError("the (A, D3) structure needs n >= 2");
  const ClassResult found = enumerate_class({{catalog("A"), catalog("D", 3)}, n, true}, jobs);
  return *found.members == rotation_class(n);
}

bool check_corner_proposition(int k, int n, int jobs) {
  if (k < 2 || n < k) throw DomainError("corner proposition needs n >= k >= 2");
  for (const char* family : {"A", "D"}) {
    const std::string name(family);
    const ClassResult two = enumerate_class({{catalog(name, k)}, n, true}, jobs);
    const ClassResult four = enumerate_class({{catalog(name + "t", k)}, n, true}, jobs);
    if (*two.members != *four.members) return false;
  }
  return true;
}

Family132 parse_family(std::string_view tag) {
  std::string key(tag);
  for (char& c : key) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (key == "a") return Family132::A;
  if (key == "ak") return Family132::Ak;
  if (key == "d") return Family132::D;
  if (key == "d3") return Family132::D3;
  if (key == "d4") return Family132::D4;
  throw DomainError("unknown 132 family '" + std::string(tag) + "'");
}

BigInt formula_132_family(Family132 which, int n, std::optional<int> k) {
  if (n < 1) throw DomainError("132-family formulas need n >= 1");
  switch (which) {
    case Family132::A:
      return n == 1 ? BigInt(1) : catalan(n) - catalan(n - 1);
    case Family132::Ak: {
      if (!k || *k < 3) throw DomainError("the Ak formula needs k >= 3");
      const MeshPattern increasing(Permutation::identity(*k - 1), {});
      const ClassResult tail = enumerate_class({{classical_132(), increasing}, n - 1, false});
      return catalan(n) - catalan(n - 1) + tail.count;
    }
    case Family132::D:
      return catalan(n - 1);
    case Family132::D3:
      return catalan(n - 1) + (n - 1);
    case Family132::D4: {
      const BigInt numerator = BigInt(n - 1) * (2 * n * n - 7 * n + 12);
      if (numerator % 6 != 0) throw std::logic_error("D4 formula numerator not divisible by 6");
      return catalan(n - 1) + numerator / 6;
    }
  }
  throw DomainError("unknown 132 family");
}

bool check_132_321_auxiliary(int n) {
  if (n < 1) throw DomainError("auxiliary count needs n >= 1");
  const MeshPattern p321(Permutation{3, 2, 1}, {});
  const ClassResult found = enumerate_class({{classical_132(), p321}, n - 1, false});
  return found.count == binomial(n - 1, 2) + 1;
}

}  // namespace meshperm
