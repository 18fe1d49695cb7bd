#include <doctest.h>

#include "bridge.hpp"
#include "enumeration.hpp"
#include "errors.hpp"
#include "matcher.hpp"

using namespace meshperm;

namespace {

// |S_n(patterns)| straight from the definitional oracle.
std::uint64_t oracle_class_size(const std::vector<MeshPattern>& patterns, int n) {
  std::uint64_t total = 0;
  for (const auto& w : oracle::permutations(n)) {
    bool avoids = true;
    for (const MeshPattern& p : patterns) {
      if (oracle::count(w, oracle::word(p.underlying()), oracle::shading(p)) > 0) {
        avoids = false;
        break;
      }
    }
    total += avoids ? 1 : 0;
  }
  return total;
}

}  // namespace

TEST_CASE("132-avoiders") {
  const MeshPattern p132 = parse_pattern("132");
  for (int n = 0; n <= 8; ++n) {
    const auto generated = avoiders_132(n);
    CHECK(generated.size() == oracle::catalan(n));
    CHECK(std::is_sorted(generated.begin(), generated.end()));
    if (n <= 7) CHECK(generated.size() == oracle_class_size({p132}, n));
    for (const Permutation& p : generated) CHECK(count(p, p132) == 0);
  }
}

TEST_CASE("enumerate_class against the oracle") {
  const std::vector<std::vector<std::string>> queries{
      {"A", "D"}, {"A", "D3"}, {"A3", "D3"}, {"132", "A"}, {"132", "A3"}, {"132", "D4"}, {"P1"}, {"mesh(21;{(0,0)})"}};
  for (const auto& names : queries) {
    std::vector<MeshPattern> patterns;
    for (const std::string& name : names) patterns.push_back(parse_pattern(name));
    for (int n = 0; n <= 7; ++n) {
      const ClassResult serial = enumerate_class({patterns, n, true}, 1);
      const ClassResult pooled = enumerate_class({patterns, n, true}, 3);
      CHECK(serial.count == oracle_class_size(patterns, n));
      CHECK(serial.count == pooled.count);
      REQUIRE(serial.members);
      CHECK(*serial.members == *pooled.members);
      CHECK(std::is_sorted(serial.members->begin(), serial.members->end()));
    }
  }
  CHECK_FALSE(enumerate_class({{catalog("A")}, 4, false}).members.has_value());
  CHECK_THROWS_AS(enumerate_class({{catalog("A")}, -1, false}), DomainError);
}

TEST_CASE("S_n(A, D3) is the rotation class") {
  CHECK(rotation_class(4) == std::vector<Permutation>{Permutation{2, 3, 4, 1}, Permutation{3, 4, 1, 2},
                                                      Permutation{4, 1, 2, 3}});
  for (int n = 2; n <= 8; ++n) CHECK(check_ad3_structure(n, 2));
  CHECK_THROWS_AS(check_ad3_structure(1), DomainError);
}

TEST_CASE("two opposite corners suffice for avoidance") {
  for (int k = 2; k <= 4; ++k) {
    for (int n = k; n <= 7; ++n) CHECK(check_corner_proposition(k, n, 1));
  }
  CHECK_THROWS_AS(check_corner_proposition(3, 2), DomainError);
}

TEST_CASE("132 family formulas against the oracle") {
  const MeshPattern p132 = parse_pattern("132");
  for (int n = 1; n <= 7; ++n) {
    CHECK(formula_132_family(Family132::A, n) == oracle_class_size({p132, catalog("A")}, n));
    CHECK(formula_132_family(Family132::D, n) == oracle_class_size({p132, catalog("D")}, n));
    CHECK(formula_132_family(Family132::D3, n) == oracle_class_size({p132, catalog("D3")}, n));
    CHECK(formula_132_family(Family132::D4, n) == oracle_class_size({p132, catalog("D4")}, n));
    for (int k = 3; k <= 5; ++k) {
      CHECK(formula_132_family(Family132::Ak, n, k) == oracle_class_size({p132, catalog("A", k)}, n));
    }
  }
  // closed form values worked by hand
  CHECK(formula_132_family(Family132::D4, 4) == 13);
  CHECK(formula_132_family(Family132::D3, 5) == 18);
  CHECK(formula_132_family(Family132::A, 1) == 1);
  CHECK(formula_132_family(Family132::Ak, 1, 3) == 1);
  CHECK_THROWS_AS(formula_132_family(Family132::Ak, 4), DomainError);
  CHECK_THROWS_AS(formula_132_family(Family132::D, 0), DomainError);
  CHECK(parse_family("d4") == Family132::D4);
  CHECK_THROWS_AS(parse_family("E"), DomainError);
}

TEST_CASE("132 and 321 together") {
  for (int n = 1; n <= 10; ++n) CHECK(check_132_321_auxiliary(n));
}
