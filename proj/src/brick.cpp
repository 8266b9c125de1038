#include "plsc/brick.hpp"

#include <algorithm>

namespace plsc {

Brick Brick::prefix(int order, int a, int b, int c) {
  if (order < 1 || order > kMaxOrder)
    fail("brick order " + std::to_string(order) + " out of range");
  auto side = [&](int k) {
    if (k < 0 || k > order)
      fail("brick side " + std::to_string(k) + " out of range for order " +
           std::to_string(order));
    return full_mask(k);
  };
  return Brick{order, side(a), side(b), side(c)};
}

static std::string mask_str(Mask m) {
  std::string s = "{";
  bool first = true;
  for (int v : Bits(m)) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

std::string to_string(const Brick& t) {
  return mask_str(t.rows) + "x" + mask_str(t.cols) + "x" + mask_str(t.syms);
}

Octants make_octants(const Brick& t0) {
  const Mask f = full_mask(t0.order);
  const int n = t0.order;
  const Mask r = t0.rows, c = t0.cols, s = t0.syms;
  const Mask rb = r ^ f, cb = c ^ f, sb = s ^ f;
  return Octants{
      Brick{n, r, c, s},    Brick{n, rb, c, s},  Brick{n, r, cb, s},
      Brick{n, r, c, sb},   Brick{n, rb, cb, s}, Brick{n, r, cb, sb},
      Brick{n, rb, c, sb},  Brick{n, rb, cb, sb},
  };
}

Brick brick_union(const Brick& x, const Brick& y) {
  if (x.order != y.order) fail("brick union: mismatched orders");
  const bool same_r = x.rows == y.rows;
  const bool same_c = x.cols == y.cols;
  const bool same_s = x.syms == y.syms;
  if (same_c && same_s && (x.rows & y.rows) == 0)
    return Brick{x.order, x.rows | y.rows, x.cols, x.syms};
  if (same_r && same_s && (x.cols & y.cols) == 0)
    return Brick{x.order, x.rows, x.cols | y.cols, x.syms};
  if (same_r && same_c && (x.syms & y.syms) == 0)
    return Brick{x.order, x.rows, x.cols, x.syms | y.syms};
  fail("brick union of " + to_string(x) + " and " + to_string(y) +
       " is not a brick");
}

Brick closure_hull(int order, std::span<const Cell> cells) {
  if (cells.empty()) fail("closure hull of an empty cell set");
  Brick h{order, 0, 0, 0};
  for (const Cell& c : cells) {
    if (c.row < 1 || c.row > order || c.col < 1 || c.col > order ||
        c.sym < 1 || c.sym > order)
      fail("closure hull: cell " + to_string(c) + " outside order " +
           std::to_string(order));
    h.rows |= bit_of(c.row);
    h.cols |= bit_of(c.col);
    h.syms |= bit_of(c.sym);
  }
  return h;
}

}  // namespace plsc
