#include <doctest.h>

#include <random>

#include "bridge.hpp"
#include "matcher.hpp"

using namespace meshperm;

namespace {

std::vector<MeshPattern> sample_patterns() {
  std::vector<MeshPattern> out;
  for (const std::string& name : catalog_names()) out.push_back(catalog(name));
  for (int k = 2; k <= 4; ++k) {
    for (const char* family : {"A", "D", "At", "Dt"}) out.push_back(catalog(family, k));
  }
  out.push_back(parse_pattern("mesh(132;{(0,0),(2,3),(3,1),(3,2)})"));
  out.emplace_back(Permutation{}, std::vector<Cell>{{0, 0}});
  out.push_back(parse_pattern("mesh(1;{(0,1),(1,0)})"));
  out.push_back(parse_pattern("2413"));
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 4);
    std::vector<int> word(static_cast<std::size_t>(m));
    std::iota(word.begin(), word.end(), 1);
    std::shuffle(word.begin(), word.end(), rng);
    std::vector<Cell> cells;
    for (int j = 0; j <= m; ++j) {
      for (int k = 0; k <= m; ++k) {
        if (rng() % 3 == 0) cells.push_back({j, k});
      }
    }
    out.emplace_back(Permutation(word), cells);
  }
  return out;
}

}  // namespace

TEST_CASE("matcher agrees with the definitional oracle") {
  for (const MeshPattern& p : sample_patterns()) {
    Matcher matcher(p);
    for (int n = 0; n <= 6; ++n) {
      for_each_permutation(n, [&](const Permutation& s) {
        const auto expected = oracle::occurrences(oracle::word(s), oracle::word(p.underlying()), oracle::shading(p));
        const auto found = matcher.occurrences(s);
        REQUIRE(found.size() == expected.size());
        for (std::size_t i = 0; i < found.size(); ++i) CHECK(found[i].values == expected[i]);
        CHECK(matcher.count(s) == expected.size());
        CHECK(matcher.contains(s) == !expected.empty());
      });
    }
  }
}

TEST_CASE("occurrence positions and values line up") {
  const Permutation host = Permutation::parse("461928753");
  const auto found = occurrences(host, catalog("P4"));
  REQUIRE(found.size() == 4);
  for (const Occurrence& o : found) {
    for (std::size_t i = 0; i < o.positions.size(); ++i) CHECK(host[o.positions[i]] == o.values[i]);
  }
  CHECK(found[0].positions == std::vector<int>{3, 4, 5});
}

TEST_CASE("classical containment") {
  const std::vector<MeshPattern> p132{parse_pattern("132")};
  CHECK(avoids(Permutation::parse("435612"), p132));
  CHECK_FALSE(avoids(Permutation::parse("1432"), p132));
  AvoidanceFilter filter(p132);
  CHECK(filter.avoids(Permutation::parse("435612")));
}

TEST_CASE("empty pattern") {
  const MeshPattern empty(Permutation{}, {});
  CHECK(count(Permutation{}, empty) == 1);
  CHECK(count(Permutation{2, 1}, empty) == 1);
  const MeshPattern shaded(Permutation{}, {{0, 0}});
  CHECK(count(Permutation{}, shaded) == 1);
  CHECK(count(Permutation{1}, shaded) == 0);
}

TEST_CASE("pattern longer than host") { CHECK(count(Permutation{1, 2}, catalog("P1")) == 0); }

TEST_CASE("early stop in for_each") {
  Matcher matcher(parse_pattern("12"));
  int visits = 0;
  matcher.for_each(Permutation::identity(6), [&](std::span<const int>) { return ++visits < 3; });
  CHECK(visits == 3);
}
