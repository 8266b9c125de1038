#pragma once

#include <string>
#include <vector>

#include "plsc/board.hpp"
#include "plsc/capacity.hpp"

namespace plsc {

// Side-length triple of a non-degenerate remote couple, 1 <= a,b,c <= n-1.
struct SidePoint {
  int a = 0, b = 0, c = 0;
  auto operator<=>(const SidePoint&) const = default;
};

std::string to_string(const SidePoint&);

// Coordinate-permutation orbit, sorted and deduplicated (size 6, 3 or 1).
std::vector<SidePoint> akin_points(const SidePoint&);

// Closed form for the minimum-capacity side triples: {a,b,c} must contain
// both 1 and n-1.  Their capacity is n-1.
bool is_min_capacity_point(int n, const SidePoint&);

// Brute-force scan of all non-degenerate triples; returns the argmin set
// (capacity n-1) sorted lexicographically.
std::vector<SidePoint> min_capacity_points(int n);

// Triples achieving the second-smallest capacity value (n, for n >= 3),
// again by brute force; empty at n = 2 where only one value occurs.
std::vector<SidePoint> second_min_capacity_points(int n);

// ---- overloaded families -----------------------------------------------
//
// Four generators of boards that overload a designated remote couple by
// exactly one rook.  Each instance is re-validated after construction:
// rooks non-attacking, the designated couple has deficit -1, and the hinge
// structure is the intended one.

enum class Family { F1, F2, F3, F4 };

struct FamilyParams {
  int n = 0;
  int far_row = 2;  // F1: row of the far rook, any row but 1
  int k = 2;        // F2: diagonal length, 1 < k < n
  // F4 corner symbols: A at (n-1,n-1), B at (n,n), C at (n-1,n), D at
  // (n,n-1); all > 1, row/col neighbours must differ (A=B or C=D is fine).
  int sym_a = 2, sym_b = 2, sym_c = 3, sym_d = 3;
};

struct FamilyInstance {
  Board board;
  Brick t0;         // the overloaded couple's near brick
  Cell last_rook;   // the rook whose removal restores deficit >= 0
};

FamilyInstance make_family(Family, const FamilyParams&);

Family family_from_name(const std::string&);
const char* family_name(Family);

}  // namespace plsc
