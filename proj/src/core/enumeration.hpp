#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "bigint.hpp"
#include "mesh_pattern.hpp"
#include "permutation.hpp"

namespace meshperm {

struct AvoidanceQuery {
  std::vector<MeshPattern> patterns;
  int n = 0;
  bool want_list = false;
};

struct ClassResult {
  int n = 0;
  BigInt count = 0;
  std::optional<std::vector<Permutation>> members;  // present iff want_list
};

// S_n(patterns), members in lexicographic order. When the query contains
// the classical pattern 132 the candidates come from avoiders_132(n)
// instead of all of S_n.
ClassResult enumerate_class(const AvoidanceQuery& query, int jobs = 1);

// S_n(132) in lexicographic order, generated from sigma = sigma' n sigma''
// with every letter of sigma' above every letter of sigma''.
std::vector<Permutation> avoiders_132(int n);

// { a(a+1)...n 1 2 ... (a-1) : 2 <= a <= n }, sorted.
std::vector<Permutation> rotation_class(int n);

// S_n(A, D3) equals rotation_class(n). DomainError for n < 2.
bool check_ad3_structure(int n, int jobs = 1);

// S_n(A_k) = S_n(At_k) and S_n(D_k) = S_n(Dt_k) as sets. DomainError
// unless n >= k >= 2.
bool check_corner_proposition(int k, int n, int jobs = 1);

enum class Family132 { A, Ak, D, D3, D4 };

// "A" | "Ak" | "D" | "D3" | "D4", case-insensitive.
Family132 parse_family(std::string_view tag);

// Closed forms for |S_n(132, X)|:
//   A   1 for n = 1, C_n - C_{n-1} otherwise
//   Ak  C_n - C_{n-1} + |S_{n-1}(132, 12...(k-1))|, the last term by
//       exhaustive enumeration (|S_0| = 1)
//   D   C_{n-1}
//   D3  C_{n-1} + n - 1
//   D4  C_{n-1} + (n-1)(2n^2 - 7n + 12)/6
// DomainError for n < 1 or (Ak) k < 3.
BigInt formula_132_family(Family132 which, int n, std::optional<int> k = std::nullopt);

// |S_{n-1}(132, 321)| == binom(n-1, 2) + 1.
bool check_132_321_auxiliary(int n);

}  // namespace meshperm
