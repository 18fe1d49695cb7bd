#include "polynomial.hpp"

#include <algorithm>
#include <optional>

namespace meshperm {

BivariatePolynomial::BivariatePolynomial(BigInt constant) { add_term(constant, 0, 0); }

BivariatePolynomial BivariatePolynomial::s() { return monomial(1, 1, 0); }
BivariatePolynomial BivariatePolynomial::t() { return monomial(1, 0, 1); }

BivariatePolynomial BivariatePolynomial::monomial(BigInt coefficient, int deg_s, int deg_t) {
  BivariatePolynomial p;
  p.add_term(coefficient, deg_s, deg_t);
  return p;
}

BigInt BivariatePolynomial::coefficient(int deg_s, int deg_t) const {
  auto it = terms_.find({deg_s, deg_t});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void BivariatePolynomial::add_term(const BigInt& coefficient, int deg_s, int deg_t) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace({deg_s, deg_t}, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& other) {
  for (const auto& [exp, c] : other.terms_) add_term(c, exp.first, exp.second);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& other) {
  for (const auto& [exp, c] : other.terms_) add_term(-c, exp.first, exp.second);
  return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ca * cb, ea.first + eb.first, ea.second + eb.second);
  }
  return out;
}

BivariatePolynomial BivariatePolynomial::swapped() const {
  BivariatePolynomial out;
  for (const auto& [exp, c] : terms_) out.add_term(c, exp.second, exp.first);
  return out;
}

std::optional<std::vector<BigInt>> BivariatePolynomial::in_sum_basis() const {
  // In the basis (s+t)^d the coefficient of s^d alone is c_d.
  int top = -1;
  for (const auto& [exp, c] : terms_) top = std::max(top, exp.first + exp.second);
  std::vector<BigInt> coords(static_cast<std::size_t>(top + 1));
  BivariatePolynomial rebuilt;
  BivariatePolynomial power = 1;
  const BivariatePolynomial sum = s() + t();
  for (int d = 0; d <= top; ++d) {
    coords[d] = coefficient(d, 0);
    rebuilt += power * BivariatePolynomial(coords[d]);
    power = power * sum;
  }
  if (!(rebuilt == *this)) return std::nullopt;
  return coords;
}

std::string BivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, BigInt>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    const int dx = x.first.first + x.first.second, dy = y.first.first + y.first.second;
    if (dx != dy) return dx < dy;
    return x.first.first > y.first.first;
  });
  std::string out;
  for (const auto& [exp, c] : ordered) {
    BigInt magnitude = c < 0 ? BigInt(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string monomial;
    auto factor = [&](const char* var, int deg) {
      if (deg == 0) return;
      if (!monomial.empty()) monomial += "*";
      monomial += var;
      if (deg > 1) monomial += "^" + std::to_string(deg);
    };
    factor("s", exp.first);
    factor("t", exp.second);
    if (monomial.empty()) {
      out += magnitude.str();
    } else if (magnitude == 1) {
      out += monomial;
    } else {
      out += magnitude.str() + "*" + monomial;
    }
  }
  return out;
}

UnivariatePolynomial::UnivariatePolynomial(std::vector<BigInt> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

void UnivariatePolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

BigInt UnivariatePolynomial::coefficient(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(coefficients_.size())) return 0;
  return coefficients_[degree];
}

void UnivariatePolynomial::add_term(const BigInt& coefficient, int degree) {
  if (static_cast<int>(coefficients_.size()) <= degree) coefficients_.resize(degree + 1);
  coefficients_[degree] += coefficient;
  trim();
}

BigInt UnivariatePolynomial::evaluate(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UnivariatePolynomial UnivariatePolynomial::shifted(int degrees) const {
  if (coefficients_.empty()) return {};
  std::vector<BigInt> out(static_cast<std::size_t>(degrees), BigInt(0));
  out.insert(out.end(), coefficients_.begin(), coefficients_.end());
  return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial& UnivariatePolynomial::operator+=(const UnivariatePolynomial& other) {
  if (coefficients_.size() < other.coefficients_.size()) coefficients_.resize(other.coefficients_.size());
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
  trim();
  return *this;
}

std::string UnivariatePolynomial::to_string() const {
  if (coefficients_.empty()) return "0";
  std::string out;
  for (std::size_t d = 0; d < coefficients_.size(); ++d) {
    const BigInt& c = coefficients_[d];
    if (c == 0) continue;
    const BigInt magnitude = c < 0 ? BigInt(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string power = d == 0 ? "" : (d == 1 ? "t" : "t^" + std::to_string(d));
    if (power.empty()) {
      out += magnitude.str();
    } else if (magnitude == 1) {
      out += power;
    } else {
      out += magnitude.str() + "*" + power;
    }
  }
  return out;
}

}  // namespace meshperm
