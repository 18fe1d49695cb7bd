#include <doctest.h>

#include "polynomial.hpp"

using namespace meshperm;

TEST_CASE("bivariate arithmetic") {
  const auto s = BivariatePolynomial::s();
  const auto t = BivariatePolynomial::t();
  const BivariatePolynomial p = (s + t) * (s + t);
  CHECK(p.coefficient(1, 1) == 2);
  CHECK(p.coefficient(2, 0) == 1);
  CHECK(p.swapped() == p);
  CHECK((p - p).is_zero());
  CHECK((BivariatePolynomial(4) + s + t).to_string() == "4 + s + t");
  CHECK(BivariatePolynomial::monomial(3, 2, 1).to_string() == "3*s^2*t");
  CHECK((s - t).swapped() == t - s);
}

TEST_CASE("sum basis") {
  const auto s = BivariatePolynomial::s();
  const auto t = BivariatePolynomial::t();
  const auto coords = (BivariatePolynomial(4) + s + t).in_sum_basis();
  REQUIRE(coords);
  CHECK(*coords == std::vector<BigInt>{4, 1});
  CHECK_FALSE((s * s + t * t).in_sum_basis().has_value());
  CHECK(BivariatePolynomial().in_sum_basis()->empty());
}

TEST_CASE("univariate") {
  UnivariatePolynomial p(std::vector<BigInt>{1, 0, 2, 0});
  CHECK(p.degree() == 2);
  CHECK(p.evaluate(2) == 9);
  CHECK(p.shifted(1).coefficient(3) == 2);
  CHECK(p.to_string() == "1 + 2*t^2");
  CHECK(UnivariatePolynomial().degree() == -1);
  CHECK(UnivariatePolynomial().to_string() == "0");
  CHECK((p + p).coefficient(0) == 2);
}
