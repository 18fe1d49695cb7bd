#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permutation.hpp"

namespace meshperm {

// Unit cell of the (m+1)x(m+1) grid, named by its bottom-left corner.
struct Cell {
  int col = 0;
  int row = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// A mesh pattern (pi, R): underlying permutation plus a set of shaded cells
// in [0,m]x[0,m]. Shading is kept sorted and duplicate-free so equal patterns
// compare equal.
class MeshPattern {
 public:
  MeshPattern() = default;
  // Throws InvalidInput if a cell falls outside [0,m]x[0,m].
  MeshPattern(Permutation underlying, std::vector<Cell> shading);

  const Permutation& underlying() const noexcept { return underlying_; }
  int length() const noexcept { return underlying_.size(); }
  std::span<const Cell> shading() const noexcept { return shading_; }
  bool is_shaded(Cell cell) const;
  bool is_classical() const noexcept { return shading_.empty(); }

  friend bool operator==(const MeshPattern&, const MeshPattern&) = default;

 private:
  Permutation underlying_;
  std::vector<Cell> shading_;
};

// Built-in patterns. `name` is one of P1..P14, A, D, At, Dt (case-insensitive),
// optionally carrying the family size as a suffix ("A3", "Dt4"). A family
// size can also be passed as `k`; A and D default to k = 2. Throws
// DomainError for unknown names and for k < 2.
MeshPattern catalog(std::string_view name, std::optional<int> k = std::nullopt);

// Names of the fixed catalog entries, P1..P14 then A and D.
std::vector<std::string> catalog_names();

// Pattern DSL:
//   spec      := NAME | CLASSICAL | MESH
//   NAME      := "P"digits | "A"[digits] | "D"[digits] | "At"[digits] | "Dt"[digits]
//   CLASSICAL := permutation word (digit or comma form)
//   MESH      := "mesh(" word ";" "{" [cell ("," cell)*] "}" ")"
//   cell      := "(" int "," int ")"
// Whitespace is insignificant. Throws ParseError carrying the offset.
MeshPattern parse_pattern(std::string_view spec);

// Splits on top-level commas ("A3,D3", "132,mesh(12;{(0,2)})"). A classical
// pattern in comma form has to be written as mesh(...) inside a list.
std::vector<MeshPattern> parse_pattern_list(std::string_view specs);

// The raw pieces parse_pattern_list would parse, whitespace-trimmed.
std::vector<std::string> split_pattern_list(std::string_view specs);

// Canonical MESH form, e.g. "mesh(132;{(0,0),(2,3)})"; an empty shading
// renders as "{}".
std::string render_pattern(const MeshPattern& p);

// Reflection in the diagonal: underlying -> inverse, (j,k) -> (k,j).
// count(sigma, p) == count(inverse(sigma), flip_diagonal(p)).
MeshPattern flip_diagonal(const MeshPattern& p);

}  // namespace meshperm
