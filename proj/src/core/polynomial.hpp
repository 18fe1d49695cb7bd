#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"

namespace meshperm {

// Sparse polynomial in s and t with integer coefficients. Zero
// coefficients are never stored, so equal polynomials have equal maps.
class BivariatePolynomial {
 public:
  using Exponents = std::pair<int, int>;  // (deg_s, deg_t)
  using Terms = std::map<Exponents, BigInt>;

  BivariatePolynomial() = default;
  BivariatePolynomial(BigInt constant);  // NOLINT: implicit from integers
  BivariatePolynomial(int constant) : BivariatePolynomial(BigInt(constant)) {}

  static BivariatePolynomial s();
  static BivariatePolynomial t();
  static BivariatePolynomial monomial(BigInt coefficient, int deg_s, int deg_t);

  const Terms& terms() const noexcept { return terms_; }
  BigInt coefficient(int deg_s, int deg_t) const;
  BigInt constant_term() const { return coefficient(0, 0); }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const BigInt& coefficient, int deg_s, int deg_t);

  BivariatePolynomial& operator+=(const BivariatePolynomial& other);
  BivariatePolynomial& operator-=(const BivariatePolynomial& other);
  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);

  // F(t, s).
  BivariatePolynomial swapped() const;

  // Coordinates c_d with F = sum_d c_d (s+t)^d, or nothing when F is not a
  // polynomial in s+t.
  std::optional<std::vector<BigInt>> in_sum_basis() const;

  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

  // "4 + s + t", "12 + 4*s + s^2 + 2*s*t"; terms by (deg_s + deg_t, -deg_s).
  std::string to_string() const;

 private:
  Terms terms_;
};

// Dense polynomial in t, coefficients by degree, trailing zeros trimmed.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<BigInt> coefficients);

  const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }
  BigInt coefficient(int degree) const;
  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }  // -1 for zero

  void add_term(const BigInt& coefficient, int degree);
  BigInt evaluate(const BigInt& t) const;
  UnivariatePolynomial shifted(int degrees) const;  // multiply by t^degrees

  UnivariatePolynomial& operator+=(const UnivariatePolynomial& other);
  friend UnivariatePolynomial operator+(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a += b; }

  friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coefficients_;
};

}  // namespace meshperm
