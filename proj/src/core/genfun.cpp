#include "genfun.hpp"

#include <chrono>

#include "enumeration.hpp"
#include "errors.hpp"
#include "matcher.hpp"
#include "parallel.hpp"
#include "stats.hpp"

namespace meshperm {

BivariatePolynomial f_poly_bruteforce(int n, int jobs) {
  if (n < 0) throw DomainError("negative permutation length");
  // Exponent pairs are bounded by n, so a dense table per chunk suffices.
  using Table = std::vector<std::uint64_t>;
  const int side = n + 1;
  auto parts = map_rank_chunks<Table>(n, jobs, [&](RankRange range) {
    Table local(static_cast<std::size_t>(side) * side, 0);
    for_each_permutation(n, range, [&](const Permutation& sigma) {
      const auto [p13, p14] = p13_p14_fast(sigma);
      ++local[p13 * side + p14];
    });
    return local;
  });
  BivariatePolynomial out;
  for (const Table& part : parts) {
    for (int a = 0; a < side; ++a) {
      for (int b = 0; b < side; ++b) out.add_term(BigInt(part[a * side + b]), a, b);
    }
  }
  return out;
}

BivariatePolynomial f_poly_recurrence(int n) {
  if (n < 1) throw DomainError("F_n is defined for n >= 1");
  if (n == 1) return 1;
  BivariatePolynomial f = 2;
  const BivariatePolynomial s_plus_t = BivariatePolynomial::s() + BivariatePolynomial::t();
  for (int m = 3; m <= n; ++m) {
    const BigInt tail = factorial(m - 2);
    f = BivariatePolynomial(BigInt(m) * tail) + (BivariatePolynomial(m - 2) + s_plus_t) * (f - tail);
  }
  return f;
}

BivariatePolynomial f_star_recurrence(int n) {
  if (n < 2) throw DomainError("F*_n is defined for n >= 2");
  BivariatePolynomial f;
  const BivariatePolynomial s_plus_t = BivariatePolynomial::s() + BivariatePolynomial::t();
  for (int m = 3; m <= n; ++m) {
    f = (BivariatePolynomial(m - 2) + s_plus_t) * f + BivariatePolynomial(factorial(m - 2)) * s_plus_t;
  }
  return f;
}

UnivariatePolynomial s_poly_bruteforce(int n) {
  if (n < 0) throw DomainError("negative permutation length");
  Matcher a(catalog("A"));
  UnivariatePolynomial out;
  for (const Permutation& sigma : avoiders_132(n)) {
    out.add_term(1, static_cast<int>(a.count(sigma)));
  }
  return out;
}

UnivariatePolynomial s_poly_recurrence(int n) {
  if (n < 0) throw DomainError("S_n is defined for n >= 0");
  UnivariatePolynomial s(std::vector<BigInt>{1});
  for (int m = 1; m <= n; ++m) {
    UnivariatePolynomial next(std::vector<BigInt>{catalan(m) - catalan(m - 1)});
    next += s.shifted(m - 1);
    s = next;
  }
  return s;
}

VerificationReport verify_functional_equation(int max_n) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.claim = "thm-S-functional";
  report.statement = "S(x,t) = (1-x)C(x) + x S(xt,t), with S(x,t) = sum_n x^n sum_{sigma in S_n(132)} t^A(sigma)";
  report.n_min = 0;
  report.n_max = max_n;
  report.notes.push_back("S_0(t) = 1 (the empty permutation), matching C_0 = 1");

  UnivariatePolynomial previous;
  for (int n = 0; n <= max_n && report.passed; ++n) {
    const UnivariatePolynomial lhs = s_poly_bruteforce(n);
    UnivariatePolynomial rhs;
    if (n == 0) {
      rhs = UnivariatePolynomial(std::vector<BigInt>{catalan(0)});
    } else {
      rhs = UnivariatePolynomial(std::vector<BigInt>{catalan(n) - catalan(n - 1)});
      rhs += previous.shifted(n - 1);
    }
    // [x^n] (x C(x)^2 - C(x) + 1)
    BigInt catalan_identity = n == 0 ? BigInt(1) - catalan(0) : -catalan(n);
    for (int i = 0; n >= 1 && i <= n - 1; ++i) catalan_identity += catalan(i) * catalan(n - 1 - i);

    if (!(lhs == rhs)) {
      report.passed = false;
      report.counterexample = Counterexample{n, std::nullopt, rhs.to_string(), lhs.to_string()};
    } else if (catalan_identity != 0) {
      report.passed = false;
      report.counterexample = Counterexample{n, std::nullopt, "0", catalan_identity.str()};
    }
    report.observed.emplace_back(n, lhs.to_string());
    previous = lhs;
  }
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace meshperm
