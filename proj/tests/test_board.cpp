#include <doctest.h>

#include <set>

#include "plsc/board.hpp"
#include "plsc/solver.hpp"
#include "testutil.hpp"

using namespace plsc;
using test::Rng;

namespace {

std::set<Cell> as_set(const std::vector<Cell>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("single rook on the order-2 board leaves four dots") {
  const Board b(2, std::vector<Cell>{{1, 1, 1}});
  CHECK(b.dots() ==
        std::vector<Cell>{{1, 2, 2}, {2, 1, 2}, {2, 2, 1}, {2, 2, 2}});
  CHECK(b.dot_count() == 4);
  CHECK(b.is_dot({2, 2, 2}));
  CHECK(b.eliminated({1, 1, 2}));
  CHECK(b.eliminated({2, 1, 1}));
  CHECK(b.occupied({1, 1, 1}));
  CHECK_FALSE(b.occupied({1, 1, 2}));
}

TEST_CASE("dots match the pairwise definition") {
  Rng rng(7);
  for (int n = 2; n <= 6; ++n) {
    CHECK(Board::empty(n).dot_count() == n * n * n);
    for (int trial = 0; trial < 24; ++trial) {
      const Board b =
          test::random_board(rng, n, static_cast<int>(rng() % (n * n)));
      CAPTURE(n);
      CHECK(b.dots() == test::brute_dots(b));
    }
  }
}

TEST_CASE("placing a rook prunes exactly the cells sharing a file with it") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const Board b = test::random_board(rng, n, static_cast<int>(rng() % n));
    const auto dots = b.dots();
    if (dots.empty()) continue;
    const Cell c = dots[rng() % dots.size()];
    const Board b2 = b.with_rook(c);
    std::set<Cell> expect;
    for (const Cell& d : dots) {
      if (d == c) continue;
      const int agree = (d.row == c.row) + (d.col == c.col) + (d.sym == c.sym);
      if (agree <= 1) expect.insert(d);
    }
    CHECK(as_set(b2.dots()) == expect);
    CHECK(b2.rook_count() == b.rook_count() + 1);
  }
}

TEST_CASE("construction rejects bad cells and attacking pairs") {
  CHECK_THROWS_WITH_AS(Board(2, std::vector<Cell>{{1, 1, 1}, {1, 1, 2}}),
                       doctest::Contains("z-file"), Error);
  CHECK_THROWS_WITH_AS(Board(3, std::vector<Cell>{{1, 1, 1}, {1, 2, 1}}),
                       doctest::Contains("y-file"), Error);
  CHECK_THROWS_WITH_AS(Board(3, std::vector<Cell>{{1, 1, 1}, {2, 1, 1}}),
                       doctest::Contains("x-file"), Error);
  CHECK_THROWS_WITH_AS(Board(3, std::vector<Cell>{{1, 1, 1}, {1, 1, 1}}),
                       doctest::Contains("duplicate"), Error);
  CHECK_THROWS_AS(Board(3, std::vector<Cell>{{0, 1, 1}}), Error);
  CHECK_THROWS_AS(Board(3, std::vector<Cell>{{1, 1, 4}}), Error);
  CHECK_THROWS_AS(Board::empty(1), Error);
  CHECK_THROWS_AS(Board::empty(65), Error);
  CHECK_NOTHROW(Board::empty(64));
}

TEST_CASE("with_rook refuses occupied and eliminated cells") {
  const Board b(3, std::vector<Cell>{{1, 1, 1}});
  CHECK_THROWS_WITH_AS(b.with_rook({1, 1, 1}),
                       doctest::Contains("already holds"), Error);
  CHECK_THROWS_WITH_AS(b.with_rook({1, 2, 1}), doctest::Contains("eliminated"),
                       Error);
  CHECK_NOTHROW(b.with_rook({2, 2, 2}));
  CHECK_THROWS_WITH_AS(b.without_rook({2, 2, 2}), doctest::Contains("no rook"),
                       Error);
  CHECK(b.without_rook({1, 1, 1}).rook_count() == 0);
}

TEST_CASE("eliminated files") {
  CHECK(Board::empty(4).eliminated_files().empty());
  Rng rng(3);
  CHECK(test::random_latin(rng, 5).eliminated_files().empty());

  // Row 1 holds symbols 1..n-1 against columns 1..n-1, and a far rook uses
  // symbol n: the z-file (1, n) can hold nothing.
  const int n = 5;
  std::vector<Cell> cells;
  for (int j = 1; j <= n - 1; ++j) cells.push_back({1, j, j});
  cells.push_back({2, n, n});
  const Board f1(n, cells);
  const auto files = f1.eliminated_files();
  CHECK(std::find(files.begin(), files.end(), FileId{Axis::Z, 1, n}) !=
        files.end());
  CHECK(f1.has_eliminated_file());

  // The 1 x 1 x n brick over that file has no dots at all.
  const Brick hinge{n, bit_of(1), bit_of(n), full_mask(n)};
  CHECK(f1.is_perfect(hinge));
  CHECK_FALSE(Board::empty(n).is_perfect(hinge));
  CHECK(Board::empty(n).is_perfect(Brick{n, 0, full_mask(n), full_mask(n)}));
}

TEST_CASE("conjugation permutes coordinate roles") {
  const Board b(5, std::vector<Cell>{{3, 4, 5}});
  CHECK(conjugated(b, kConjCycle).rooks() == std::vector<Cell>{{5, 3, 4}});
  CHECK(conjugated(b, kConjCycleSq).rooks() == std::vector<Cell>{{4, 5, 3}});

  Rng rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const Board p = test::random_board(rng, n, static_cast<int>(rng() % 7));
    Board six = p;
    for (int i = 0; i < 6; ++i) six = conjugated(six, kConjCycle);
    CHECK(six.rooks() == p.rooks());

    // Dots transform along with the rooks.
    for (const ConjPerm& cp :
         {kConjCycle, kConjCycleSq, ConjPerm{0, 2, 1}, ConjPerm{2, 1, 0}}) {
      const Board q = conjugated(p, cp);
      std::set<Cell> mapped;
      for (const Cell& d : p.dots()) mapped.insert(apply_conj(cp, d));
      CHECK(as_set(q.dots()) == mapped);
    }
  }
}

TEST_CASE("isotopies relabel coordinates") {
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Board p = test::random_board(rng, n, static_cast<int>(rng() % 9));
    const auto rp = test::random_perm(rng, n);
    const auto cp = test::random_perm(rng, n);
    const auto sp = test::random_perm(rng, n);
    const Board q = apply_isotopy(p, rp, cp, sp);
    CHECK(q.rook_count() == p.rook_count());
    std::set<Cell> mapped;
    for (const Cell& d : p.dots())
      mapped.insert(Cell{rp[d.row - 1], cp[d.col - 1], sp[d.sym - 1]});
    CHECK(as_set(q.dots()) == mapped);

    // Inverse closes the loop.
    std::vector<int> rpi(n), cpi(n), spi(n);
    for (int i = 0; i < n; ++i) {
      rpi[rp[i] - 1] = i + 1;
      cpi[cp[i] - 1] = i + 1;
      spi[sp[i] - 1] = i + 1;
    }
    CHECK(apply_isotopy(q, rpi, cpi, spi).rooks() == p.rooks());
  }
  const Board b = Board::empty(3);
  const std::vector<int> bad = {1, 1, 2};
  const std::vector<int> id = {1, 2, 3};
  CHECK_THROWS_AS(apply_isotopy(b, bad, id, id), Error);
  CHECK_THROWS_AS(apply_isotopy(b, id, id, std::vector<int>{1, 2}), Error);
}

TEST_CASE("extension relations") {
  const Board p(3, std::vector<Cell>{{1, 1, 1}});
  const Board q(3, std::vector<Cell>{{1, 1, 1}, {2, 2, 1}});
  const Board other(3, std::vector<Cell>{{1, 1, 2}});
  CHECK(extension_relation(p, q) == ExtensionKind::expansion);
  CHECK(extension_relation(p, p) == ExtensionKind::expansion);
  CHECK(extension_relation(p, other) == ExtensionKind::none);
  CHECK_THROWS_AS(extension_relation(q, Board::empty(2)), Error);

  const Board big(4, std::vector<Cell>{{1, 1, 1}});
  const Board big_more(4, std::vector<Cell>{{1, 1, 1}, {4, 4, 4}});
  CHECK(extension_relation(p, big) == ExtensionKind::embedding);
  CHECK(extension_relation(p, big_more) == ExtensionKind::extension);

  const Board full = test::cyclic_square(3);
  CHECK(full.is_completion());
  const Board sub = full.without_rook({3, 3, 2});
  CHECK(extension_relation(sub, full) == ExtensionKind::completion);
}

TEST_CASE("rook counts inside bricks of a completion stay within bounds") {
  Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const Board sq = test::random_latin(rng, n);
    const Brick t = test::random_brick(rng, n);
    int direct = 0;
    for (const Cell& c : sq.rooks())
      if (t.contains(c)) ++direct;
    CHECK(sq.rooks_in(t) == direct);
    const int a = t.a(), b = t.b(), c = t.c();
    CHECK(direct <= std::min({a * b, a * c, b * c}));
    CHECK(direct >= std::max(0, a * b - (n - c) * std::min(a, b)));
  }
}

TEST_CASE("closure hull is the smallest enclosing brick") {
  const std::vector<Cell> cells = {{1, 1, 1}, {2, 3, 2}};
  const Brick h = closure_hull(4, cells);
  CHECK(h.rows == (bit_of(1) | bit_of(2)));
  CHECK(h.cols == (bit_of(1) | bit_of(3)));
  CHECK(h.syms == (bit_of(1) | bit_of(2)));
  CHECK(h.a() + h.b() + h.c() == 6);
  for (const Cell& c : cells) CHECK(h.contains(c));
  CHECK_THROWS_AS(closure_hull(4, {}), Error);
  CHECK_THROWS_AS(closure_hull(2, cells), Error);
}

TEST_CASE("empty-file counts") {
  const int n = 4;
  const Board e = Board::empty(n);
  const Brick t{n, full_mask(2), full_mask(3), full_mask(n)};
  CHECK(empty_files(e, t, Axis::Z) == 6);
  CHECK_THROWS_WITH_AS(empty_files(e, t, Axis::X), doctest::Contains("span"),
                       Error);

  const Board b(n, std::vector<Cell>{{1, 1, 1}, {2, 3, 2}, {1, 4, 2}});
  CHECK(empty_files(b, t, Axis::Z) == 4);  // files (1,1) and (2,3) now used
  const Brick yb{n, full_mask(2), full_mask(n), full_mask(2)};
  CHECK(empty_files(b, yb, Axis::Y) == 1);  // (1,1) (1,2) (2,2) used

  // Union-of-two form: halves that join into a full-extent brick.
  const Brick lo{n, full_mask(2), full_mask(3), full_mask(2)};
  const Brick hi{n, full_mask(2), full_mask(3), full_mask(n) ^ full_mask(2)};
  CHECK(empty_files(b, lo, hi, Axis::Z) == empty_files(b, t, Axis::Z));
  CHECK_THROWS_AS(empty_files(b, lo, lo, Axis::Z), Error);
}

TEST_CASE("octants and brick unions") {
  const Brick t0{4, bit_of(1) | bit_of(2), bit_of(1), bit_of(3)};
  const Octants o = make_octants(t0);
  CHECK(o.t3.rows == (bit_of(3) | bit_of(4)));
  CHECK(o.t1a.rows == o.t3.rows);
  CHECK(o.t1a.cols == t0.cols);
  CHECK(o.t2ab.syms == t0.syms);
  CHECK(o.t2ac.cols == t0.cols);
  const Brick u = brick_union(o.t0, o.t1c);
  CHECK(u.syms == full_mask(4));
  CHECK(u.full_extent(Axis::Z));
  CHECK_THROWS_AS(brick_union(o.t0, o.t3), Error);
  CHECK(t0.degenerate() == false);
  CHECK(Brick{4, 0, bit_of(1), bit_of(2)}.degenerate());
  CHECK(Brick::full(4).degenerate());
}

TEST_CASE("board hash is stable and order-sensitive") {
  const Board a(3, std::vector<Cell>{{1, 1, 1}, {2, 2, 2}});
  const Board b(3, std::vector<Cell>{{2, 2, 2}, {1, 1, 1}});
  CHECK(board_hash(a) == board_hash(b));  // rooks are kept sorted
  CHECK(board_hash(a) != board_hash(Board::empty(3)));
  CHECK(board_hash(a).size() == 16);
}
