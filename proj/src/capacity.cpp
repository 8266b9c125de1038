#include "plsc/capacity.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <random>
#include <utility>

namespace plsc {

int capacity(int n, int a, int b, int c) {
  if (n < 1 || n > kMaxOrder)
    fail("capacity: order " + std::to_string(n) + " out of range");
  auto chk = [&](int s) {
    if (s < 0 || s > n)
      fail("capacity: side " + std::to_string(s) + " out of range for order " +
           std::to_string(n));
  };
  chk(a), chk(b), chk(c);
  return n * n - (a + b + c) * n + a * b + b * c + c * a;
}

int capacity(const RemoteCouple& rc) {
  return capacity(rc.t0.order, rc.t0.a(), rc.t0.b(), rc.t0.c());
}

int deficit(const Board& p, const RemoteCouple& rc) {
  return capacity(rc) - p.rooks_in(rc.t0) - p.rooks_in(rc.t3);
}

bool is_stuffed(const Board& p, const RemoteCouple& rc) {
  return deficit(p, rc) == 0;
}

bool is_overloaded(const Board& p, const RemoteCouple& rc) {
  return deficit(p, rc) < 0;
}

int layer_weight_deficit(const Board& p, const AxisCouple& ac, int sym) {
  const int n = ac.order;
  if (n != p.order()) fail("axis couple order does not match the board");
  if (sym < 1 || sym > n) fail("layer index out of range");
  const int a = popcount(ac.rows), b = popcount(ac.cols);
  const Mask f = full_mask(n);
  const int n_v = p.rooks_in_layer(sym, ac.rows, ac.cols);
  const int n_w = p.rooks_in_layer(sym, ac.rows ^ f, ac.cols ^ f);
  return (a + b - n) - (n_v - n_w);
}

int weight_deficit(const Board& p, const AxisCouple& ac) {
  int total = 0;
  for (int s = 1; s <= ac.order; ++s) total += layer_weight_deficit(p, ac, s);
  return total;
}

int weight_deficit(const Board& p, const Brick& t0) {
  if (t0.order != p.order()) fail("brick order does not match the board");
  const AxisCouple ac{t0.order, t0.rows, t0.cols};
  int total = 0;
  for (int s : Bits(t0.syms)) total += layer_weight_deficit(p, ac, s);
  return total;
}

// ---- audits -------------------------------------------------------------

static long long brick_deficit(const Board& p, const Brick& t0) {
  return deficit(p, RemoteCouple::around(t0));
}

IdentityAudit audit_weight_via_files(const Board& p, const Brick& t0) {
  const Octants o = make_octants(t0);
  const long long lhs = weight_deficit(p, t0);
  const long long rhs = empty_files(p, o.t0, o.t1b, Axis::Y) -
                        empty_files(p, o.t1b, o.t2ab, Axis::X);
  return {"weight-empty-files", lhs, rhs};
}

IdentityAudit audit_rook_balance(const Board& p, const Brick& t0) {
  const Octants o = make_octants(t0);
  const int n = t0.order;
  const long long lhs = p.rooks_in(o.t0);
  const long long rhs = p.rooks_in(o.t2ab) +
                        static_cast<long long>(t0.c()) *
                            (t0.a() + t0.b() - n) -
                        weight_deficit(p, t0);
  return {"rook-count-balance", lhs, rhs};
}

IdentityAudit audit_weight_plus_mate(const Board& p, const Brick& t0) {
  const Octants o = make_octants(t0);
  const long long lhs =
      weight_deficit(p, t0) + empty_files(p, o.t2ab, o.t3, Axis::Z);
  return {"weight-plus-mate", lhs, brick_deficit(p, t0)};
}

IdentityAudit audit_hinge_deficit(const Board& p, const Brick& t0) {
  const Octants o = make_octants(t0);
  const long long rhs = empty_files(p, o.t2bc, o.t3, Axis::X) +
                        empty_files(p, o.t0, o.t1b, Axis::Y) -
                        empty_files(p, o.t1b, o.t2bc, Axis::Z);
  return {"hinge-deficit", brick_deficit(p, t0), rhs};
}

IdentityAudit audit_five_axes_deficit(const Board& p, const Brick& t0) {
  const Octants o = make_octants(t0);
  const long long rhs = empty_files(p, o.t0, o.t1c, Axis::Z) +
                        empty_files(p, o.t1b, o.t2bc, Axis::Z) +
                        empty_files(p, o.t2ab, o.t3, Axis::Z) -
                        empty_files(p, o.t1b, o.t2ab, Axis::X) -
                        empty_files(p, o.t1c, o.t2bc, Axis::Y);
  return {"five-axes-deficit", brick_deficit(p, t0), rhs};
}

IdentityAudit audit_three_axes_deficit(const Board& p, const Brick& t0) {
  const Octants o = make_octants(t0);
  const int n = t0.order;
  const long long whole = static_cast<long long>(n) * n - p.rook_count();
  const long long rhs = whole - empty_files(p, o.t1a, o.t2ab, Axis::Y) -
                        empty_files(p, o.t1b, o.t2bc, Axis::Z) -
                        empty_files(p, o.t1c, o.t2ac, Axis::X);
  return {"three-axes-deficit", brick_deficit(p, t0), rhs};
}

IdentityAudit audit_five_axes_volume(const Brick& t0) {
  const Octants o = make_octants(t0);
  auto vol = [](const Brick& x, const Brick& y) {
    return brick_union(x, y).volume();
  };
  const long long lhs = o.t0.volume() + o.t3.volume();
  const long long rhs = vol(o.t0, o.t1c) + vol(o.t1b, o.t2bc) +
                        vol(o.t2ab, o.t3) - vol(o.t1b, o.t2ab) -
                        vol(o.t1c, o.t2bc);
  return {"five-axes-volume", lhs, rhs};
}

static long long file_count(const Brick& x, const Brick& y, Axis dir) {
  const Brick u = brick_union(x, y);
  if (!u.full_extent(dir)) fail("file count: union not full along the axis");
  return u.volume() / u.order;
}

IdentityAudit audit_five_axes_capacity(const Brick& t0) {
  const Octants o = make_octants(t0);
  const long long lhs = capacity(t0.order, t0.a(), t0.b(), t0.c());
  const long long rhs = file_count(o.t0, o.t1c, Axis::Z) +
                        file_count(o.t1b, o.t2bc, Axis::Z) +
                        file_count(o.t2ab, o.t3, Axis::Z) -
                        file_count(o.t1b, o.t2ab, Axis::X) -
                        file_count(o.t1c, o.t2bc, Axis::Y);
  return {"five-axes-capacity", lhs, rhs};
}

IdentityAudit audit_three_axes_volume(const Brick& t0) {
  const Octants o = make_octants(t0);
  auto vol = [](const Brick& x, const Brick& y) {
    return brick_union(x, y).volume();
  };
  const long long n = t0.order;
  const long long lhs = o.t0.volume() + o.t3.volume();
  const long long rhs = n * n * n - vol(o.t1a, o.t2ab) - vol(o.t1b, o.t2bc) -
                        vol(o.t1c, o.t2ac);
  return {"three-axes-volume", lhs, rhs};
}

IdentityAudit audit_three_axes_capacity(const Brick& t0) {
  const Octants o = make_octants(t0);
  const long long n = t0.order;
  const long long lhs = capacity(t0.order, t0.a(), t0.b(), t0.c());
  const long long rhs = n * n - file_count(o.t1a, o.t2ab, Axis::Y) -
                        file_count(o.t1b, o.t2bc, Axis::Z) -
                        file_count(o.t1c, o.t2ac, Axis::X);
  return {"three-axes-capacity", lhs, rhs};
}

std::vector<IdentityAudit> run_identity_audits(const Board& p,
                                               const Brick& t0) {
  return {
      audit_weight_via_files(p, t0),   audit_rook_balance(p, t0),
      audit_weight_plus_mate(p, t0),   audit_hinge_deficit(p, t0),
      audit_five_axes_deficit(p, t0),  audit_three_axes_deficit(p, t0),
      audit_five_axes_volume(t0),      audit_five_axes_capacity(t0),
      audit_three_axes_volume(t0),     audit_three_axes_capacity(t0),
  };
}

// ---- capacity-condition check ------------------------------------------

DeficitReport axis_min_deficit(const Board& p, Mask rows, Mask cols_bar) {
  const int n = p.order();
  const Mask f = full_mask(n);
  if ((rows & ~f) || (cols_bar & ~f))
    fail("axis masks exceed the board order");
  const Mask cols = cols_bar ^ f;
  const AxisCouple hinge{n, rows, cols};
  Mask layers = 0;
  for (int s = 1; s <= n; ++s)
    if (layer_weight_deficit(p, hinge, s) < 0) layers |= bit_of(s);
  DeficitReport rep;
  rep.dir = Axis::Z;
  rep.rows = rows;
  rep.cols = cols;
  rep.layers = layers;
  const Brick t0{n, rows, cols, layers};
  const RemoteCouple rc = RemoteCouple::around(t0);
  rep.c0 = p.rooks_in(rc.t0);
  rep.c3 = p.rooks_in(rc.t3);
  rep.cap = capacity(rc);
  rep.deficit = rep.cap - rep.c0 - rep.c3;
  return rep;
}

int default_exhaustive_bound() {
  // Subset scans blow past any budget long before order 24; the cap keeps a
  // stray environment value from requesting a 2^64-step loop.
  if (const char* env = std::getenv("PLSC_EXHAUSTIVE_BOUND")) {
    const int v = std::atoi(env);
    if (v >= 2) return std::min(v, 24);
  }
  return 6;
}

namespace {

// Rows with identical rook placements (same (col,sym) pairs) are
// interchangeable in every deficit, so subset scans only need to choose
// how many rows of each profile class to take.
struct ProfileClasses {
  std::vector<Mask> groups;  // members of each class

  static ProfileClasses rows_of(const Board& p) {
    ProfileClasses pc;
    const int n = p.order();
    std::vector<std::vector<std::pair<int, int>>> keys;
    for (int r = 1; r <= n; ++r) {
      std::vector<std::pair<int, int>> key;
      for (int c : Bits(p.z_file_cols(r))) key.emplace_back(c, p.sym_at(r, c));
      bool found = false;
      for (std::size_t g = 0; g < keys.size(); ++g)
        if (keys[g] == key) {
          pc.groups[g] |= bit_of(r);
          found = true;
          break;
        }
      if (!found) {
        keys.push_back(std::move(key));
        pc.groups.push_back(bit_of(r));
      }
    }
    return pc;
  }

  static ProfileClasses cols_of(const Board& p) {
    ProfileClasses pc;
    const int n = p.order();
    std::vector<std::vector<std::pair<int, int>>> keys;
    for (int c = 1; c <= n; ++c) {
      std::vector<std::pair<int, int>> key;
      for (int r = 1; r <= n; ++r)
        if (p.sym_at(r, c) != 0) key.emplace_back(r, p.sym_at(r, c));
      bool found = false;
      for (std::size_t g = 0; g < keys.size(); ++g)
        if (keys[g] == key) {
          pc.groups[g] |= bit_of(c);
          found = true;
          break;
        }
      if (!found) {
        keys.push_back(std::move(key));
        pc.groups.push_back(bit_of(c));
      }
    }
    return pc;
  }

  // Representative subsets: the t lowest members of each class.
  void representatives(std::vector<Mask>* out) const {
    out->clear();
    out->push_back(0);
    for (Mask g : groups) {
      const std::size_t base = out->size();
      Mask taken = 0;
      std::vector<Mask> prefixes;
      for (int v : Bits(g)) {
        taken |= bit_of(v);
        prefixes.push_back(taken);
      }
      for (std::size_t i = 0; i < base; ++i)
        for (Mask pre : prefixes) out->push_back((*out)[i] | pre);
    }
  }
};

void all_subsets(int n, std::vector<Mask>* out) {
  out->clear();
  out->reserve(std::size_t{1} << n);
  for (Mask m = 0; m < (Mask{1} << n); ++m) out->push_back(m);
}

struct Orientation {
  ConjPerm perm;
  Axis dir;
};

constexpr Orientation kOrientations[] = {
    {kConjIdentity, Axis::Z},
    {kConjCycle, Axis::Y},
    {kConjCycleSq, Axis::X},
};

DeficitReport map_back(const DeficitReport& rep, const ConjPerm& perm,
                       Axis dir, int order) {
  if (perm == kConjIdentity) {
    DeficitReport out = rep;
    out.dir = dir;
    return out;
  }
  const Brick t0{order, rep.rows, rep.cols, rep.layers};
  const Brick orig = t0.conjugated(conj_inverse(perm));
  DeficitReport out = rep;
  out.dir = dir;
  out.rows = orig.rows;
  out.cols = orig.cols;
  out.layers = orig.syms;
  return out;
}

}  // namespace

DeficitReport check_capacity(const Board& p, const CheckOptions& opt) {
  const int n = p.order();
  std::optional<DeficitReport> best;
  auto consider = [&](const DeficitReport& rep) {
    if (!best || rep.deficit < best->deficit) best = rep;
  };

  if (opt.mode == CheckOptions::Mode::randomized) {
    std::mt19937_64 rng(opt.seed);
    const Mask f = full_mask(n);
    consider(axis_min_deficit(p, 0, 0));  // baseline so the report exists
    std::vector<Board> views;
    views.push_back(p);
    if (opt.all_orientations) {
      views.push_back(conjugated(p, kOrientations[1].perm));
      views.push_back(conjugated(p, kOrientations[2].perm));
    }
    for (std::uint64_t i = 0; i < opt.samples; ++i) {
      const std::size_t o = opt.all_orientations ? rng() % 3 : 0;
      const Mask rows = rng() & f;
      const Mask cols_bar = rng() & f;
      const DeficitReport rep = axis_min_deficit(views[o], rows, cols_bar);
      consider(map_back(rep, kOrientations[o].perm, kOrientations[o].dir, n));
    }
    return *best;
  }

  if (n > opt.exhaustive_bound)
    fail_bound("exhaustive capacity check refused at order " +
               std::to_string(n) + " (bound " +
               std::to_string(opt.exhaustive_bound) +
               "; set PLSC_EXHAUSTIVE_BOUND or use randomized mode)");

  const int orientations = opt.all_orientations ? 3 : 1;
  std::vector<Mask> row_sets, col_sets;
  for (int o = 0; o < orientations; ++o) {
    const Board view =
        o == 0 ? p : conjugated(p, kOrientations[o].perm);
    if (opt.merge_profiles) {
      ProfileClasses::rows_of(view).representatives(&row_sets);
      ProfileClasses::cols_of(view).representatives(&col_sets);
    } else {
      all_subsets(n, &row_sets);
      all_subsets(n, &col_sets);
    }
    for (Mask r : row_sets)
      for (Mask cb : col_sets) {
        const DeficitReport rep = axis_min_deficit(view, r, cb);
        consider(
            map_back(rep, kOrientations[o].perm, kOrientations[o].dir, n));
      }
  }
  return *best;
}

// ---- layer balance ------------------------------------------------------

namespace {

struct LayerView {
  int n = 0;
  std::vector<Mask> rook_cols;  // [row] cols with a rook of this symbol
  std::vector<Mask> dot_cols;   // [row] cols where the cell is a dot

  LayerView(const Board& p, int sym) : n(p.order()) {
    rook_cols.assign(n + 1, 0);
    dot_cols.assign(n + 1, 0);
    for (int r = 1; r <= n; ++r)
      for (int c = 1; c <= n; ++c) {
        if (p.sym_at(r, c) == sym) rook_cols[r] |= bit_of(c);
        if (has_bit(p.dot_syms(r, c), sym)) dot_cols[r] |= bit_of(c);
      }
  }

  int dw(Mask rows, Mask cols) const {
    const Mask f = full_mask(n);
    int n_v = 0, n_w = 0;
    for (int r = 1; r <= n; ++r) {
      if (has_bit(rows, r))
        n_v += popcount(rook_cols[r] & cols);
      else
        n_w += popcount(rook_cols[r] & ~cols & f);
    }
    return popcount(rows) + popcount(cols) - n - (n_v - n_w);
  }

  Mask dots_of_rows(Mask rows) const {
    Mask m = 0;
    for (int r : Bits(rows)) m |= dot_cols[r];
    return m;
  }
};

}  // namespace

BalanceReport balance_condition(const Board& p, int sym,
                                const BalanceOptions& opt) {
  const int n = p.order();
  if (sym < 1 || sym > n) fail("layer index out of range");
  BalanceReport rep;
  rep.sym = sym;
  const LayerView lv(p, sym);
  const Mask f = full_mask(n);

  if (n <= opt.exhaustive_bound) {
    for (Mask rows = 1; rows <= f; ++rows) {
      const Mask allowed = f & ~lv.dots_of_rows(rows);
      for (Mask cols = allowed; cols; cols = (cols - 1) & allowed) {
        const int dw = lv.dw(rows, cols);
        if (dw > 0) rep.violations.push_back({rows, cols, dw});
      }
    }
    return rep;
  }

  if (!opt.allow_heuristic)
    fail_bound("exhaustive balance scan refused at order " +
               std::to_string(n) + " (bound " +
               std::to_string(opt.exhaustive_bound) + ")");

  rep.exhaustive = false;
  std::mt19937_64 rng(opt.seed);
  auto try_point = [&](Mask rows) {
    if (rows == 0) return;
    Mask cols = f & ~lv.dots_of_rows(rows);
    if (cols == 0) return;
    int cur = lv.dw(rows, cols);
    bool improved = true;
    while (improved) {
      improved = false;
      for (int r = 1; r <= n; ++r) {
        const Mask nrows = rows ^ bit_of(r);
        if (nrows == 0) continue;
        const Mask ncols = f & ~lv.dots_of_rows(nrows);
        if (ncols == 0) continue;
        const int d = lv.dw(nrows, ncols);
        if (d > cur) {
          rows = nrows, cols = ncols, cur = d, improved = true;
        }
      }
      for (int c : Bits(cols)) {
        const Mask ncols = cols ^ bit_of(c);
        if (ncols == 0) continue;
        const int d = lv.dw(rows, ncols);
        if (d > cur) {
          cols = ncols, cur = d, improved = true;
        }
      }
    }
    if (cur > 0) rep.violations.push_back({rows, cols, cur});
  };
  for (int i = 0; i < opt.heuristic_restarts; ++i) try_point(rng() & f);
  std::sort(rep.violations.begin(), rep.violations.end(),
            [](const BalanceViolation& a, const BalanceViolation& b) {
              return std::tie(a.rows, a.cols) < std::tie(b.rows, b.cols);
            });
  rep.violations.erase(
      std::unique(rep.violations.begin(), rep.violations.end(),
                  [](const BalanceViolation& a, const BalanceViolation& b) {
                    return a.rows == b.rows && a.cols == b.cols;
                  }),
      rep.violations.end());
  return rep;
}

}  // namespace plsc
