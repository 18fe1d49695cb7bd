#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace meshperm {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& value) { return value.str(); }

BigInt factorial(int n);
BigInt binomial(int n, int k);
// C_n = binom(2n, n) / (n + 1).
BigInt catalan(int n);

}  // namespace meshperm
