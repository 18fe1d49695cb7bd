#include <doctest.h>

#include "bridge.hpp"
#include "errors.hpp"
#include "matcher.hpp"
#include "mesh_pattern.hpp"

using namespace meshperm;

TEST_CASE("catalog patterns match their published shadings") {
  for (int i = 1; i <= 14; ++i) {
    const MeshPattern p = catalog("P" + std::to_string(i));
    CHECK(oracle::word(p.underlying()) == oracle::catalog_word(i));
    CHECK(oracle::shading(p) == oracle::catalog_shading(i));
  }
  CHECK(catalog("p13") == catalog("P13"));
}

TEST_CASE("monotone families") {
  CHECK(catalog("A") == MeshPattern(Permutation{1, 2}, {{0, 2}, {2, 0}}));
  CHECK(catalog("A3") == MeshPattern(Permutation{1, 2, 3}, {{0, 3}, {3, 0}}));
  CHECK(catalog("A", 3) == catalog("A3"));
  CHECK(catalog("D3") == MeshPattern(Permutation{3, 2, 1}, {{0, 0}, {3, 3}}));
  CHECK(catalog("Dt4") == MeshPattern(Permutation{4, 3, 2, 1}, {{0, 0}, {0, 4}, {4, 0}, {4, 4}}));
  CHECK(catalog("at2") == MeshPattern(Permutation{1, 2}, {{0, 0}, {0, 2}, {2, 0}, {2, 2}}));
  CHECK_THROWS_AS(catalog("A1"), DomainError);
  CHECK_THROWS_AS(catalog("D", 0), DomainError);
  CHECK_THROWS_AS(catalog("P15"), DomainError);
  CHECK_THROWS_AS(catalog("Q"), DomainError);
}

TEST_CASE("cells outside the grid are rejected") {
  CHECK_THROWS_AS(MeshPattern(Permutation{1, 2}, {{3, 0}}), InvalidInput);
  CHECK_THROWS_AS(MeshPattern(Permutation{1, 2}, {{0, -1}}), InvalidInput);
  const MeshPattern dedup(Permutation{1}, {{1, 1}, {0, 0}, {1, 1}});
  CHECK(dedup.shading().size() == 2);
  CHECK(dedup.is_shaded({0, 0}));
  CHECK_FALSE(dedup.is_shaded({0, 1}));
}

TEST_CASE("pattern DSL") {
  CHECK(parse_pattern("132") == MeshPattern(Permutation{1, 3, 2}, {}));
  CHECK(parse_pattern(" mesh( 132 ; { (0,0), (2,3),(3,1),(3,2) } ) ") ==
        MeshPattern(Permutation{1, 3, 2}, {{0, 0}, {2, 3}, {3, 1}, {3, 2}}));
  CHECK(parse_pattern("mesh(12;{})") == MeshPattern(Permutation{1, 2}, {}));
  CHECK(parse_pattern("A3") == catalog("A3"));

  const auto list = parse_pattern_list("A3,mesh(21;{(0,0)}),132");
  REQUIRE(list.size() == 3);
  CHECK(list[1] == MeshPattern(Permutation{2, 1}, {{0, 0}}));
  CHECK(split_pattern_list(" P13 , P14") == std::vector<std::string>{"P13", "P14"});
}

TEST_CASE("parse errors carry offsets") {
  try {
    parse_pattern("mesh(12;{(0,5)})");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 9);
  }
  try {
    parse_pattern_list("A3,mesh(12;(0,0))");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() >= 3);
  }
  CHECK_THROWS_AS(parse_pattern("mesh(12"), ParseError);
  CHECK_THROWS_AS(parse_pattern("mesh(11;{})"), ParseError);
  CHECK_THROWS_AS(parse_pattern(""), ParseError);
}

TEST_CASE("render and parse round trip") {
  std::vector<MeshPattern> all;
  for (const std::string& name : catalog_names()) all.push_back(catalog(name));
  all.push_back(catalog("Dt5"));
  all.push_back(parse_pattern("2413"));
  for (const MeshPattern& p : all) CHECK(parse_pattern(render_pattern(p)) == p);
  CHECK(render_pattern(catalog("A")) == "mesh(12;{(0,2),(2,0)})");
}

TEST_CASE("diagonal flip corresponds to inversion of the host") {
  const MeshPattern p(Permutation{1, 3, 2}, {{0, 0}, {2, 3}, {3, 1}, {3, 2}});
  const MeshPattern flipped = flip_diagonal(p);
  CHECK(flipped.underlying() == Permutation{1, 3, 2});
  CHECK(flipped == MeshPattern(Permutation{1, 3, 2}, {{0, 0}, {3, 2}, {1, 3}, {2, 3}}));
  CHECK(flip_diagonal(flipped) == p);
  for (int i = 1; i <= 14; ++i) {
    const MeshPattern c = catalog("P" + std::to_string(i));
    for_each_permutation(6, [&](const Permutation& s) {
      CHECK(count(s, c) == count(inverse(s), flip_diagonal(c)));
    });
  }
}
