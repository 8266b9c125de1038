#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "plsc/board.hpp"
#include "plsc/brick.hpp"
#include "plsc/capacity.hpp"

// Reference implementations written straight from the definitions; the
// library is tested against these, never the other way round.
namespace plsc::test {

// A dot shares no file with any rook, i.e. agrees with every rook in at
// most one coordinate.
inline std::vector<Cell> brute_dots(const Board& p) {
  std::vector<Cell> out;
  const int n = p.order();
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c)
      for (int s = 1; s <= n; ++s) {
        bool free = true;
        for (const Cell& rk : p.rooks()) {
          const int agree =
              (rk.row == r) + (rk.col == c) + (rk.sym == s);
          if (agree >= 2) {
            free = false;
            break;
          }
        }
        if (free) out.push_back(Cell{r, c, s});
      }
  return out;
}

// Deficit of one remote couple, from raw rook loops.
inline int brute_deficit(const Board& p, const Brick& t0) {
  const Brick t3 = t0.complemented();
  int c0 = 0, c3 = 0;
  for (const Cell& rk : p.rooks()) {
    if (t0.contains(rk)) ++c0;
    if (t3.contains(rk)) ++c3;
  }
  return capacity(t0.order, t0.a(), t0.b(), t0.c()) - c0 - c3;
}

// Minimum deficit over every remote couple (all 8^n subset triples).
inline int brute_min_deficit(const Board& p, Brick* witness = nullptr) {
  const int n = p.order();
  const Mask f = full_mask(n);
  int best = brute_deficit(p, Brick{n, 0, 0, 0});
  if (witness) *witness = Brick{n, 0, 0, 0};
  for (Mask r = 0; r <= f; ++r)
    for (Mask c = 0; c <= f; ++c)
      for (Mask s = 0; s <= f; ++s) {
        const Brick t0{n, r, c, s};
        const int d = brute_deficit(p, t0);
        if (d < best) {
          best = d;
          if (witness) *witness = t0;
        }
      }
  return best;
}

// Minimum deficit over the couples hinged on one z-axis: all 2^n symbol
// subsets for fixed rows x ~cols_bar.
inline int brute_axis_min(const Board& p, Mask rows, Mask cols_bar) {
  const int n = p.order();
  const Mask f = full_mask(n);
  const Mask cols = f & ~cols_bar;
  int best = brute_deficit(p, Brick{n, rows, cols, 0});
  for (Mask s = 0; s <= f; ++s)
    best = std::min(best, brute_deficit(p, Brick{n, rows, cols, s}));
  return best;
}

// ---- randomness ---------------------------------------------------------

using Rng = std::mt19937_64;

inline std::vector<int> random_perm(Rng& rng, int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline Board random_board(Rng& rng, int n, int target_rooks) {
  std::vector<Cell> cells;
  Board b = Board::empty(n);
  for (int i = 0; i < target_rooks; ++i) {
    auto dots = b.dots();
    if (dots.empty()) break;
    b = b.with_rook(dots[rng() % dots.size()]);
  }
  return b;
}

inline Brick random_brick(Rng& rng, int n) {
  const Mask f = full_mask(n);
  return Brick{n, static_cast<Mask>(rng()) & f, static_cast<Mask>(rng()) & f,
               static_cast<Mask>(rng()) & f};
}

inline Board cyclic_square(int n) {
  std::vector<Cell> cells;
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c)
      cells.push_back(Cell{r, c, (r + c - 2) % n + 1});
  return Board(n, cells);
}

inline Board random_latin(Rng& rng, int n) {
  return apply_isotopy(cyclic_square(n), random_perm(rng, n),
                       random_perm(rng, n), random_perm(rng, n));
}

// ---- independent enumeration and canonical forms ------------------------

// Pairwise-check recursion sharing no code with the library enumerator.
inline void naive_enumerate(int n, int max_rooks,
                            std::vector<std::uint64_t>* per_rooks,
                            std::vector<std::vector<Cell>>* boards = nullptr) {
  per_rooks->assign(max_rooks + 1, 0);
  std::vector<Cell> cur;
  std::vector<Cell> all;
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c)
      for (int s = 1; s <= n; ++s) all.push_back(Cell{r, c, s});
  auto attacks = [](const Cell& a, const Cell& b) {
    return (a.row == b.row) + (a.col == b.col) + (a.sym == b.sym) >= 2;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    ++(*per_rooks)[cur.size()];
    if (boards) boards->push_back(cur);
    if (static_cast<int>(cur.size()) == max_rooks) return;
    for (std::size_t i = start; i < all.size(); ++i) {
      bool ok = true;
      for (const Cell& c : cur)
        if (attacks(c, all[i])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(all[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

// Minimum image over the entire symmetry group by explicit enumeration of
// all 6 * (n!)^3 transforms; n <= 3 only.
inline std::vector<Cell> naive_canonical(const Board& p) {
  const int n = p.order();
  std::vector<std::vector<int>> perms;
  std::vector<int> base(n);
  for (int i = 0; i < n; ++i) base[i] = i + 1;
  std::vector<int> cur = base;
  do {
    perms.push_back(cur);
  } while (std::next_permutation(cur.begin(), cur.end()));

  const ConjPerm conj[6] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                            {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<Cell> best;
  bool first = true;
  for (const ConjPerm& cp : conj) {
    std::vector<Cell> rotated;
    for (const Cell& c : p.rooks()) rotated.push_back(apply_conj(cp, c));
    for (const auto& pr : perms)
      for (const auto& pc : perms)
        for (const auto& ps : perms) {
          std::vector<Cell> img;
          for (const Cell& c : rotated)
            img.push_back(Cell{pr[c.row - 1], pc[c.col - 1], ps[c.sym - 1]});
          std::sort(img.begin(), img.end());
          if (first || img < best) {
            best = img;
            first = false;
          }
        }
  }
  return best;
}

}  // namespace plsc::test
