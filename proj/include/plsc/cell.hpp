#pragma once

#include <array>
#include <compare>
#include <string>

#include "plsc/common.hpp"

namespace plsc {

// A cell of the n x n x n board, all coordinates 1-based.
struct Cell {
  int row = 0;
  int col = 0;
  int sym = 0;

  auto operator<=>(const Cell&) const = default;
};

inline std::string to_string(const Cell& c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + "," +
         std::to_string(c.sym) + ")";
}

// Direction of a file (axis-parallel line of n cells).
//   X varies the row:    fixed (col, sym)
//   Y varies the column: fixed (row, sym)
//   Z varies the symbol: fixed (row, col)
enum class Axis : int { X = 0, Y = 1, Z = 2 };

inline const char* axis_name(Axis a) {
  switch (a) {
    case Axis::X: return "x";
    case Axis::Y: return "y";
    default: return "z";
  }
}

struct FileId {
  Axis dir = Axis::Z;
  int fixed1 = 0;  // X: col,  Y: row,  Z: row
  int fixed2 = 0;  // X: sym,  Y: sym,  Z: col

  auto operator<=>(const FileId&) const = default;
};

// A conjugation permutes the coordinate roles: new coordinate i is old
// coordinate perm[i] (0 = row, 1 = col, 2 = sym).  The classic cyclic
// conjugate sends (i,j,k) to (k,i,j), i.e. the new row is the old symbol.
using ConjPerm = std::array<int, 3>;

inline constexpr ConjPerm kConjIdentity = {0, 1, 2};
inline constexpr ConjPerm kConjCycle = {2, 0, 1};    // (k,i,j)
inline constexpr ConjPerm kConjCycleSq = {1, 2, 0};  // (j,k,i)

inline ConjPerm conj_inverse(const ConjPerm& p) {
  ConjPerm inv{};
  for (int i = 0; i < 3; ++i) inv[p[i]] = i;
  return inv;
}

inline Cell apply_conj(const ConjPerm& p, const Cell& c) {
  std::array<int, 3> old{c.row, c.col, c.sym};
  return Cell{old[p[0]], old[p[1]], old[p[2]]};
}

}  // namespace plsc
