#pragma once

#include "polynomial.hpp"
#include "report.hpp"

namespace meshperm {

// F_n(s,t) = sum over S_n of s^P13 t^P14, via the Lehmer-code counters.
BivariatePolynomial f_poly_bruteforce(int n, int jobs = 1);

// F_1 = 1, F_2 = 2, F_n = n(n-2)! + (n-2+s+t)(F_{n-1} - (n-2)!).
// DomainError for n < 1.
BivariatePolynomial f_poly_recurrence(int n);

// F*_n = F_n - F_n(0,0) through F*_2 = 0 and
// F*_n = (n-2+s+t) F*_{n-1} + (n-2)!(s+t). DomainError for n < 2.
BivariatePolynomial f_star_recurrence(int n);

// S_n(t) = sum over S_n(132) of t^A, with A counted by the matcher.
UnivariatePolynomial s_poly_bruteforce(int n);

// S_0 = 1, S_n = (C_n - C_{n-1}) + t^{n-1} S_{n-1}. DomainError for n < 0.
UnivariatePolynomial s_poly_recurrence(int n);

// Compares the x^n coefficients of S(x,t) and (1-x)C(x) + x S(xt,t) for
// n = 0..max_n with every S_n taken from s_poly_bruteforce, and checks
// x C(x)^2 - C(x) + 1 = 0 to the same order.
VerificationReport verify_functional_equation(int max_n);

}  // namespace meshperm
