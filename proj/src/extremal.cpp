#include "plsc/extremal.hpp"

#include <algorithm>
#include <set>

namespace plsc {

std::string to_string(const SidePoint& p) {
  return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + "," +
         std::to_string(p.c) + ")";
}

std::vector<SidePoint> akin_points(const SidePoint& p) {
  std::set<SidePoint> out;
  int v[3] = {p.a, p.b, p.c};
  std::sort(v, v + 3);
  do {
    out.insert(SidePoint{v[0], v[1], v[2]});
  } while (std::next_permutation(v, v + 3));
  return {out.begin(), out.end()};
}

bool is_min_capacity_point(int n, const SidePoint& p) {
  auto in_range = [&](int s) { return s >= 1 && s <= n - 1; };
  if (!in_range(p.a) || !in_range(p.b) || !in_range(p.c)) return false;
  auto holds = [&](int v) { return p.a == v || p.b == v || p.c == v; };
  return holds(1) && holds(n - 1);
}

static std::vector<SidePoint> points_with_capacity(int n, int target) {
  std::vector<SidePoint> out;
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b)
      for (int c = 1; c < n; ++c)
        if (capacity(n, a, b, c) == target) out.push_back({a, b, c});
  return out;
}

static int min_capacity_value(int n) {
  int best = capacity(n, 1, 1, 1);
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b)
      for (int c = 1; c < n; ++c) best = std::min(best, capacity(n, a, b, c));
  return best;
}

std::vector<SidePoint> min_capacity_points(int n) {
  if (n < 2 || n > kMaxOrder)
    fail("classification order " + std::to_string(n) + " out of range");
  return points_with_capacity(n, min_capacity_value(n));
}

std::vector<SidePoint> second_min_capacity_points(int n) {
  if (n < 2 || n > kMaxOrder)
    fail("classification order " + std::to_string(n) + " out of range");
  const int least = min_capacity_value(n);
  int second = -1;
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b)
      for (int c = 1; c < n; ++c) {
        const int v = capacity(n, a, b, c);
        if (v > least && (second < 0 || v < second)) second = v;
      }
  if (second < 0) return {};
  return points_with_capacity(n, second);
}

// ---- family generators --------------------------------------------------

static FamilyInstance finish(int n, std::vector<Cell> cells, Brick t0,
                             Cell last) {
  Board board(n, cells);  // construction re-checks the rook placement
  const RemoteCouple rc = RemoteCouple::around(t0);
  const int d = deficit(board, rc);
  if (d != -1)
    fail("family instance failed its deficit audit: got " +
         std::to_string(d));
  return FamilyInstance{std::move(board), t0, last};
}

// A full diagonal of symbols on row 1 short of one column, plus one far
// rook completing the overload of the (1, n-1, n-1) couple.
static FamilyInstance make_f1(const FamilyParams& prm) {
  const int n = prm.n;
  if (n < 2) fail("F1 needs order >= 2");
  if (prm.far_row < 2 || prm.far_row > n)
    fail("F1 far rook must avoid row 1");
  std::vector<Cell> cells;
  for (int j = 1; j <= n - 1; ++j) cells.push_back({1, j, j});
  const Cell last{prm.far_row, n, n};
  cells.push_back(last);
  const Brick t0{n, bit_of(1), full_mask(n - 1), full_mask(n - 1)};
  return finish(n, std::move(cells), t0, last);
}

// Symbol-1 diagonal of length k against a remote column of fresh symbols;
// overloads the (k, n-1, 1) couple.
static FamilyInstance make_f2(const FamilyParams& prm) {
  const int n = prm.n;
  const int k = prm.k;
  if (n < 3) fail("F2 needs order >= 3");
  if (k <= 1 || k >= n) fail("F2 needs 1 < k < n");
  std::vector<Cell> cells;
  for (int i = 1; i <= k; ++i) cells.push_back({i, i, 1});
  for (int i = k + 1; i <= n; ++i) cells.push_back({i, n, i});
  const Cell last{n, n, n};
  const Brick t0{n, full_mask(k), full_mask(n - 1), bit_of(1)};
  return finish(n, std::move(cells), t0, last);
}

// The order-4 sporadic instance on the central (2,2,2) couple.
static FamilyInstance make_f3(const FamilyParams& prm) {
  if (prm.n != 4) fail("F3 exists only at order 4");
  std::vector<Cell> cells = {
      {1, 1, 1}, {2, 2, 1}, {1, 2, 2}, {2, 1, 2}, {3, 3, 3},
  };
  const Cell last{3, 3, 3};
  const Brick t0{4, full_mask(2), full_mask(2), full_mask(2)};
  return finish(4, cells, t0, last);
}

// Short symbol-1 diagonal plus a 2x2 corner block of later symbols;
// overloads the (n-2, n-2, 1) couple at capacity n with n+1 rooks.
static FamilyInstance make_f4(const FamilyParams& prm) {
  const int n = prm.n;
  if (n < 4) fail("F4 needs order >= 4");
  const int A = prm.sym_a, B = prm.sym_b, C = prm.sym_c, D = prm.sym_d;
  for (int s : {A, B, C, D})
    if (s < 2 || s > n) fail("F4 corner symbols must lie in 2..n");
  if (A == C || A == D || B == C || B == D)
    fail("F4 corner symbols sharing a row or column must differ");
  std::vector<Cell> cells;
  for (int i = 1; i <= n - 3; ++i) cells.push_back({i, i, 1});
  cells.push_back({n - 1, n - 1, A});
  cells.push_back({n, n, B});
  cells.push_back({n - 1, n, C});
  const Cell last{n, n - 1, D};
  cells.push_back(last);
  const Brick t0{n, full_mask(n - 2), full_mask(n - 2), bit_of(1)};
  return finish(n, std::move(cells), t0, last);
}

FamilyInstance make_family(Family fam, const FamilyParams& prm) {
  switch (fam) {
    case Family::F1: return make_f1(prm);
    case Family::F2: return make_f2(prm);
    case Family::F3: return make_f3(prm);
    default: return make_f4(prm);
  }
}

Family family_from_name(const std::string& name) {
  if (name == "F1" || name == "f1") return Family::F1;
  if (name == "F2" || name == "f2") return Family::F2;
  if (name == "F3" || name == "f3") return Family::F3;
  if (name == "F4" || name == "f4") return Family::F4;
  fail_parse("unknown family '" + name + "' (expected F1..F4)");
}

const char* family_name(Family f) {
  switch (f) {
    case Family::F1: return "F1";
    case Family::F2: return "F2";
    case Family::F3: return "F3";
    default: return "F4";
  }
}

}  // namespace plsc
