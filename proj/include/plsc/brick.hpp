#pragma once

#include <span>
#include <string>
#include <vector>

#include "plsc/cell.hpp"
#include "plsc/common.hpp"

namespace plsc {

// Axis-aligned product set R x C x S inside the order-n board.
struct Brick {
  int order = 0;
  Mask rows = 0;
  Mask cols = 0;
  Mask syms = 0;

  auto operator<=>(const Brick&) const = default;

  int a() const { return popcount(rows); }
  int b() const { return popcount(cols); }
  int c() const { return popcount(syms); }
  long long volume() const {
    return static_cast<long long>(a()) * b() * c();
  }

  bool contains(const Cell& cell) const {
    return has_bit(rows, cell.row) && has_bit(cols, cell.col) &&
           has_bit(syms, cell.sym);
  }

  // A side of size 0 or n makes every counting bound trivial.
  bool degenerate() const {
    const Mask f = full_mask(order);
    return rows == 0 || cols == 0 || syms == 0 || rows == f || cols == f ||
           syms == f;
  }

  bool full_extent(Axis dir) const {
    const Mask f = full_mask(order);
    switch (dir) {
      case Axis::X: return rows == f;
      case Axis::Y: return cols == f;
      default: return syms == f;
    }
  }

  Brick complemented() const {
    const Mask f = full_mask(order);
    return Brick{order, rows ^ f, cols ^ f, syms ^ f};
  }

  Brick conjugated(const ConjPerm& p) const {
    std::array<Mask, 3> old{rows, cols, syms};
    return Brick{order, old[p[0]], old[p[1]], old[p[2]]};
  }

  static Brick full(int order) {
    const Mask f = full_mask(order);
    return Brick{order, f, f, f};
  }

  // Prefix-interval brick {1..a} x {1..b} x {1..c}; handy in tests and
  // generators, the general masks carry arbitrary subsets.
  static Brick prefix(int order, int a, int b, int c);
};

std::string to_string(const Brick&);

// The eight bricks obtained by complementing subsets of t0's factors.
// Subscripts name the complemented factors: t1a flips rows, t1b cols,
// t1c syms, t2ab rows+cols, and so on; t3 flips all three.
struct Octants {
  Brick t0, t1a, t1b, t1c, t2ab, t2bc, t2ac, t3;
};

Octants make_octants(const Brick& t0);

// Union of two bricks when the result is itself a brick (factors equal in
// two directions, disjoint in the third); errors otherwise.
Brick brick_union(const Brick&, const Brick&);

// Smallest brick containing every listed cell; errors on an empty list.
Brick closure_hull(int order, std::span<const Cell> cells);

}  // namespace plsc
