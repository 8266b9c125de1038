#include <doctest.h>

#include <map>
#include <set>

#include "plsc/extremal.hpp"
#include "plsc/io.hpp"
#include "plsc/solver.hpp"
#include "testutil.hpp"

using namespace plsc;
using test::Rng;

namespace {

// Grid-recursion completability oracle: fill (row,col) positions in order,
// trying every symbol; independent of the cover-matrix machinery.
bool brute_completable(const Board& p) {
  const int n = p.order();
  std::vector<int> grid(n * n, 0);
  std::vector<Mask> row_used(n + 1, 0), col_used(n + 1, 0);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c)
      if (const int s = p.sym_at(r, c)) {
        grid[(r - 1) * n + (c - 1)] = s;
        row_used[r] |= bit_of(s);
        col_used[c] |= bit_of(s);
      }
  std::function<bool(int)> rec = [&](int pos) -> bool {
    if (pos == n * n) return true;
    if (grid[pos]) return rec(pos + 1);
    const int r = pos / n + 1, c = pos % n + 1;
    for (int s = 1; s <= n; ++s) {
      if (has_bit(row_used[r], s) || has_bit(col_used[c], s)) continue;
      row_used[r] |= bit_of(s), col_used[c] |= bit_of(s);
      if (rec(pos + 1)) return true;
      row_used[r] &= ~bit_of(s), col_used[c] &= ~bit_of(s);
    }
    return false;
  };
  return rec(0);
}

// Row-by-row matching oracle for one symbol layer.
bool brute_layer_completable(const Board& p, int sym) {
  const int n = p.order();
  std::vector<int> fixed(n + 1, 0);
  Mask used = 0;
  for (const Cell& c : p.rooks())
    if (c.sym == sym) {
      fixed[c.row] = c.col;
      used |= bit_of(c.col);
    }
  std::function<bool(int)> rec = [&](int r) -> bool {
    if (r > n) return true;
    if (fixed[r]) return rec(r + 1);
    for (int c = 1; c <= n; ++c) {
      if (has_bit(used, c)) continue;
      if (!(p.dot_syms(r, c) & bit_of(sym))) continue;
      used |= bit_of(c);
      if (rec(r + 1)) return true;
      used &= ~bit_of(c);
    }
    return false;
  };
  return rec(1);
}

}  // namespace

TEST_CASE("completions of easy boards") {
  for (int n = 4; n <= 6; ++n) {
    const auto done = complete(Board::empty(n));
    REQUIRE(done.has_value());
    CHECK(done->is_completion());
    CHECK(extension_relation(Board::empty(n), *done) ==
          ExtensionKind::completion);
  }

  Rng rng(83);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 3);
    Board sq = test::random_latin(rng, n);
    CHECK(complete(sq)->rooks() == sq.rooks());  // already finished

    Board partial = sq;
    for (int j = 0; j < 2 * n && partial.rook_count() > 0; ++j) {
      const auto& rooks = partial.rooks();
      partial = partial.without_rook(rooks[rng() % rooks.size()]);
    }
    CHECK(is_completable(partial));
    const auto filled = complete(partial);
    REQUIRE(filled.has_value());
    CHECK(extension_relation(partial, *filled) == ExtensionKind::completion);
    for (int s = 1; s <= n; ++s) CHECK(layer_completable(partial, s));
  }
}

TEST_CASE("cover search agrees with plain grid recursion") {
  Rng rng(89);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 2);
    const Board p = test::random_board(rng, n, static_cast<int>(rng() % 8));
    const bool want = brute_completable(p);
    CHECK(is_completable(p) == want);
    CHECK(complete(p).has_value() == want);
  }
}

TEST_CASE("overloaded family boards cannot be completed") {
  std::vector<FamilyInstance> instances;
  for (int n = 2; n <= 6; ++n) {
    FamilyParams prm;
    prm.n = n;
    instances.push_back(make_family(Family::F1, prm));
    if (n >= 3) instances.push_back(make_family(Family::F2, prm));
    if (n == 4) instances.push_back(make_family(Family::F3, prm));
    if (n >= 4) instances.push_back(make_family(Family::F4, prm));
  }
  for (const FamilyInstance& fam : instances) {
    CAPTURE(fam.board.order());
    CHECK_FALSE(is_completable(fam.board));
    CHECK_FALSE(complete(fam.board).has_value());
    CHECK(is_completable(fam.board.without_rook(fam.last_rook)));
  }
}

TEST_CASE("layer matching equals the row-by-row oracle") {
  Rng rng(97);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 3);
    const Board p = test::random_board(rng, n, static_cast<int>(rng() % 14));
    const int sym = 1 + static_cast<int>(rng() % n);
    CHECK(layer_completable(p, sym) == brute_layer_completable(p, sym));
  }
  CHECK_THROWS_AS(layer_completable(Board::empty(3), 4), Error);
}

TEST_CASE("layer balance passes exactly on completable layers") {
  Rng rng(101);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 3);
    const Board p = test::random_board(rng, n, static_cast<int>(rng() % 14));
    const int sym = 1 + static_cast<int>(rng() % n);
    CHECK(balance_condition(p, sym).ok() == layer_completable(p, sym));
  }
}

TEST_CASE("raw enumeration counts") {
  EnumerationStats stats;
  std::map<int, std::uint64_t> by_count;
  enumerate_boards(2, -1, false,
                   [&](const Board& p) { ++by_count[p.rook_count()]; },
                   &stats);
  CHECK(by_count == std::map<int, std::uint64_t>{
                        {0, 1}, {1, 8}, {2, 16}, {3, 8}, {4, 2}});
  CHECK(stats.emitted == 35);

  std::vector<std::uint64_t> want;
  test::naive_enumerate(3, 4, &want);
  std::vector<std::uint64_t> got(5, 0);
  enumerate_boards(3, 4, false,
                   [&](const Board& p) { ++got[p.rook_count()]; });
  CHECK(got == want);

  CHECK_THROWS_AS(enumerate_boards(7, 2, false, [](const Board&) {}),
                  BoundError);
}

TEST_CASE("deduplicated enumeration walks one board per class") {
  std::map<int, std::uint64_t> classes2;
  enumerate_boards(2, -1, true,
                   [&](const Board& p) { ++classes2[p.rook_count()]; });
  CHECK(classes2 == std::map<int, std::uint64_t>{
                        {0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 1}});

  // Order 3: the walked representatives cover every class found by brute
  // canonicalization over all 6 * (3!)^3 transforms, exactly once.
  std::vector<std::uint64_t> per;
  std::vector<std::vector<Cell>> all;
  test::naive_enumerate(3, 3, &per, &all);
  std::set<std::vector<Cell>> naive_keys;
  for (const auto& cells : all)
    naive_keys.insert(test::naive_canonical(Board(3, cells)));

  std::set<std::vector<Cell>> rep_keys;
  std::uint64_t reps = 0;
  enumerate_boards(3, 3, true, [&](const Board& p) {
    ++reps;
    CHECK(canonical_form(p) == test::naive_canonical(p));
    rep_keys.insert(test::naive_canonical(p));
  });
  CHECK(reps == naive_keys.size());
  CHECK(rep_keys == naive_keys);
}

TEST_CASE("canonical form is a class invariant") {
  Rng rng(103);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const Board p = test::random_board(rng, n, static_cast<int>(rng() % 7));
    Board q = apply_isotopy(p, test::random_perm(rng, n),
                            test::random_perm(rng, n),
                            test::random_perm(rng, n));
    if (rng() % 2) q = conjugated(q, kConjCycle);
    if (rng() % 2) q = conjugated(q, ConjPerm{0, 2, 1});
    CHECK(canonical_form(p) == canonical_form(q));
    CHECK(canonical_key(p) == canonical_key(q));
    if (n <= 3) CHECK(canonical_form(p) == test::naive_canonical(p));

    // The canonical form is itself a member of the class.
    const Board canon(n, canonical_form(p));
    CHECK(canonical_form(canon) == canonical_form(p));
  }
  CHECK(canonical_key(Board::empty(3)) != canonical_key(Board::empty(4)));
  CHECK(canonical_form(Board(3, std::vector<Cell>{{2, 3, 1}})) ==
        std::vector<Cell>{{1, 1, 1}});
}

TEST_CASE("completability theorem holds through order 3") {
  const VerifyReport r2 = verify_completability_theorem(2);
  CHECK(r2.n == 2);
  CHECK(r2.boards == 33);
  CHECK(r2.completable == 29);
  CHECK(r2.violations == 4);
  CHECK(r2.ok());
  CHECK(r2.by_rooks.size() == 4);
  CHECK(r2.by_rooks[2].boards == 16);
  CHECK(r2.by_rooks[2].completable == 12);
  CHECK(r2.by_rooks[2].capacity_ok == 12);
  CHECK(r2.by_rooks[3].completable == 8);

  VerifyOptions dd;
  dd.dedup = true;
  const VerifyReport c2 = verify_completability_theorem(2, -1, dd);
  CHECK(c2.boards == 5);
  CHECK(c2.violations == 1);
  CHECK(c2.ok());

  const VerifyReport r3 = verify_completability_theorem(3);
  CHECK(r3.ok());
  std::vector<std::uint64_t> want;
  test::naive_enumerate(3, 4, &want);
  REQUIRE(r3.by_rooks.size() == want.size());
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < want.size(); ++k) {
    CHECK(r3.by_rooks[k].boards == want[k]);
    CHECK(r3.by_rooks[k].completable == r3.by_rooks[k].capacity_ok);
    total += want[k];
  }
  CHECK(r3.boards == total);
  CHECK(r3.violations == r3.boards - r3.completable);

  CHECK_THROWS_AS(verify_completability_theorem(7), BoundError);
}

TEST_CASE("small boards never violate the capacity condition") {
  for (int n : {3, 4}) {
    const VerifyReport rep = verify_small_board_bound(n);
    CHECK(rep.violations == 0);
    CHECK(rep.ok());
    CHECK(rep.boards > 0);
  }
  const VerifyReport sampled = verify_small_board_bound(5, 10000, 12345);
  CHECK(sampled.boards == 10000);
  CHECK(sampled.violations == 0);
  CHECK(sampled.ok());
}

TEST_CASE("counterexample scan is sound") {
  const CounterexampleReport none = find_counterexamples(3, 0, 4, 10);
  CHECK(none.n == 3);
  CHECK(none.classes_scanned > 0);
  CHECK(none.found.empty());  // completable and capacity-clean coincide here

  const CounterexampleReport some = find_counterexamples(3, 5, 9, 8);
  for (const auto& cells : some.found) {
    const Board b(3, cells);
    CHECK_FALSE(is_completable(b));
    CHECK_FALSE(check_capacity(b).violated());
  }
}

TEST_CASE("one solver instance serves many boards") {
  CompletionSolver solver(4);
  Rng rng(107);
  for (int trial = 0; trial < 60; ++trial) {
    const Board p = test::random_board(rng, 4, static_cast<int>(rng() % 9));
    CompletionSolver fresh(4);
    const bool want = fresh.completable(p.rooks());
    CHECK(solver.completable(p.rooks()) == want);
    const auto sol = solver.solve(p.rooks());
    CHECK(sol.has_value() == want);
    if (sol) {
      const Board done(4, *sol);
      CHECK(done.is_completion());
      for (const Cell& c : p.rooks()) CHECK(done.sym_at(c.row, c.col) == c.sym);
    }
  }
  CHECK(solver.nodes_visited() > 0);

  // Attacking input is simply unsatisfiable, not an error.
  const std::vector<Cell> clash = {{1, 1, 1}, {1, 1, 2}};
  CHECK_FALSE(solver.completable(clash));
  const std::vector<Cell> dup = {{1, 1, 1}, {1, 1, 1}};
  CHECK_FALSE(solver.completable(dup));
}
