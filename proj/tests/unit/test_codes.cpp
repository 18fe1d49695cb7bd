#include <doctest.h>

#include "bridge.hpp"
#include "codes.hpp"
#include "errors.hpp"

using namespace meshperm;

TEST_CASE("phi on the worked example") {
  CHECK(phi(Permutation::parse("461928753")) == Permutation::parse("461293578"));
  CHECK(phi(Permutation::parse("461293578")) == Permutation::parse("461928753"));
  CHECK_THROWS_AS(phi(Permutation{}), DomainError);
}

TEST_CASE("phi agrees with its definition") {
  for (int n = 1; n <= 7; ++n) {
    for_each_permutation(n, [&](const Permutation& s) {
      CHECK(oracle::word(phi(s)) == oracle::phi(oracle::word(s)));
    });
  }
}

TEST_CASE("psi on the worked example") {
  const Permutation s = Permutation::parse("13,15,4,11,2,5,10,1,14,8,6,12,3,9,7");
  const Permutation image = Permutation::parse("13,15,4,6,2,12,7,1,14,9,11,5,3,8,10");
  const ActiveZone zone = active_zone(s);
  REQUIRE_FALSE(zone.empty());
  CHECK(zone.interval == std::make_pair(5, 12));
  CHECK(active_zone(image) == zone);
  CHECK(psi(s) == image);
  CHECK(psi(image) == s);
}

TEST_CASE("psi fixes permutations with an empty active zone") {
  CHECK(psi(Permutation{}) == Permutation{});
  CHECK(active_zone(Permutation{1}).empty());
  for (int n = 0; n <= 6; ++n) {
    for_each_permutation(n, [&](const Permutation& s) {
      if (active_zone(s).empty()) CHECK(psi(s) == s);
    });
  }
}

TEST_CASE("Lehmer code") {
  const Permutation s = Permutation::parse("3,5,2,6,1,4,12,8,9,7,11,14,13,10");
  const SubexceedantFunction code = lehmer(s);
  CHECK(code == SubexceedantFunction{2, 3, 1, 2, 0, 0, 5, 1, 1, 0, 1, 2, 1, 0});
  CHECK(unlehmer(code) == s);
  for (int n = 0; n <= 6; ++n) {
    for_each_permutation(n, [&](const Permutation& p) {
      const SubexceedantFunction e = lehmer(p);
      CHECK(std::vector<int>(e.entries().begin(), e.entries().end()) == oracle::lehmer(oracle::word(p)));
      CHECK(unlehmer(e) == p);
    });
  }
  CHECK_THROWS_AS(SubexceedantFunction({1, 1}), InvalidInput);
  CHECK(SubexceedantFunction::parse("(2,0,0)") == SubexceedantFunction{2, 0, 0});
  CHECK(SubexceedantFunction{2, 0, 0}.to_string() == "(2,0,0)");
}

TEST_CASE("theta on the worked example") {
  const Permutation s = Permutation::parse("3,5,2,6,1,4,12,8,9,7,11,14,13,10");
  const SubexceedantFunction code = lehmer(s);
  CHECK(m0_set(code) == std::vector<int>{6, 10});
  CHECK(m1_set(code) == std::vector<int>{8, 9, 11, 13});
  const SubexceedantFunction swapped = theta_code(code);
  CHECK(swapped == SubexceedantFunction{2, 3, 1, 2, 0, 1, 5, 0, 0, 1, 0, 2, 0, 0});
  CHECK(big_theta(s) == Permutation::parse("3,5,2,6,1,7,12,4,8,10,9,14,11,13"));
  CHECK(big_theta(big_theta(s)) == s);
}

TEST_CASE("all three maps are involutions") {
  for (Involution which : {Involution::Phi, Involution::Psi, Involution::Theta}) {
    for (int n = 1; n <= 7; ++n) {
      for_each_permutation(n, [&](const Permutation& s) { CHECK(apply(which, apply(which, s)) == s); });
    }
  }
}

TEST_CASE("involution names") {
  CHECK(parse_involution("PHI") == Involution::Phi);
  CHECK(parse_involution("theta") == Involution::Theta);
  CHECK(involution_name(Involution::Psi) == "psi");
  CHECK_THROWS_AS(parse_involution("omega"), DomainError);
}
