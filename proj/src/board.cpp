#include "plsc/board.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>

namespace plsc {

static void check_coord(int order, const Cell& c) {
  if (c.row < 1 || c.row > order || c.col < 1 || c.col > order || c.sym < 1 ||
      c.sym > order)
    fail("cell " + to_string(c) + " outside the order-" +
         std::to_string(order) + " board");
}

Board::Board(int order, std::span<const Cell> rooks) : order_(order) {
  if (order < 2) fail("board order must be at least 2");
  if (order > kMaxOrder)
    fail("board order " + std::to_string(order) + " exceeds the supported " +
         std::to_string(kMaxOrder));
  grid_.assign((order + 1) * (order + 1), 0);
  z_occ_.assign(order + 1, 0);
  y_occ_.assign(order + 1, 0);
  x_occ_.assign(order + 1, 0);
  rooks_.reserve(rooks.size());
  for (const Cell& c : rooks) {
    check_coord(order, c);
    const bool clash_z = has_bit(z_occ_[c.row], c.col);
    const bool clash_y = has_bit(y_occ_[c.row], c.sym);
    const bool clash_x = has_bit(x_occ_[c.col], c.sym);
    if (clash_z || clash_y || clash_x) {
      // Recover the offending partner for the message.
      for (const Cell& p : rooks_) {
        const int shared = (p.row == c.row) + (p.col == c.col) +
                           (p.sym == c.sym);
        if (shared < 2) continue;
        if (shared == 3) fail("duplicate rook " + to_string(c));
        const char* f = (p.row == c.row && p.col == c.col)   ? "z"
                        : (p.row == c.row && p.sym == c.sym) ? "y"
                                                             : "x";
        fail("rooks " + to_string(p) + " and " + to_string(c) +
             " attack along a " + std::string(f) + "-file");
      }
      fail("rook " + to_string(c) + " attacks an earlier rook");
    }
    grid_[c.row * (order + 1) + c.col] = c.sym;
    z_occ_[c.row] |= bit_of(c.col);
    y_occ_[c.row] |= bit_of(c.sym);
    x_occ_[c.col] |= bit_of(c.sym);
    rooks_.push_back(c);
  }
  std::sort(rooks_.begin(), rooks_.end());
}

Board Board::empty(int order) { return Board(order, {}); }

bool Board::occupied(const Cell& c) const {
  check_coord(order_, c);
  return sym_at(c.row, c.col) == c.sym;
}

bool Board::is_dot(const Cell& c) const {
  check_coord(order_, c);
  return !has_bit(z_occ_[c.row], c.col) && !has_bit(y_occ_[c.row], c.sym) &&
         !has_bit(x_occ_[c.col], c.sym);
}

bool Board::eliminated(const Cell& c) const {
  return !occupied(c) && !is_dot(c);
}

Mask Board::dot_syms(int row, int col) const {
  if (has_bit(z_occ_[row], col)) return 0;
  return full_mask(order_) & ~(y_occ_[row] | x_occ_[col]);
}

std::vector<Cell> Board::dots() const {
  std::vector<Cell> out;
  for (int r = 1; r <= order_; ++r)
    for (int c = 1; c <= order_; ++c)
      for (int s : Bits(dot_syms(r, c))) out.push_back(Cell{r, c, s});
  return out;
}

long long Board::dot_count() const {
  long long total = 0;
  for (int r = 1; r <= order_; ++r)
    for (int c = 1; c <= order_; ++c) total += popcount(dot_syms(r, c));
  return total;
}

Board Board::with_rook(const Cell& c) const {
  check_coord(order_, c);
  if (occupied(c)) fail("cell " + to_string(c) + " already holds a rook");
  if (!is_dot(c)) fail("cell " + to_string(c) + " is eliminated, not a dot");
  std::vector<Cell> cells = rooks_;
  cells.push_back(c);
  return Board(order_, cells);
}

Board Board::without_rook(const Cell& c) const {
  check_coord(order_, c);
  if (!occupied(c)) fail("no rook at " + to_string(c));
  std::vector<Cell> cells;
  cells.reserve(rooks_.size() - 1);
  for (const Cell& r : rooks_)
    if (r != c) cells.push_back(r);
  return Board(order_, cells);
}

std::vector<FileId> Board::eliminated_files() const {
  std::vector<FileId> out;
  const Mask full = full_mask(order_);
  for (int r = 1; r <= order_; ++r)
    for (int c = 1; c <= order_; ++c)
      if (!has_bit(z_occ_[r], c) && (y_occ_[r] | x_occ_[c]) == full)
        out.push_back(FileId{Axis::Z, r, c});
  for (int r = 1; r <= order_; ++r)
    for (int s = 1; s <= order_; ++s) {
      if (has_bit(y_occ_[r], s)) continue;
      // Cell (r,c,s) is available iff the z- and x-files admit it.
      Mask cols = 0;
      for (int c = 1; c <= order_; ++c)
        if (!has_bit(z_occ_[r], c) && !has_bit(x_occ_[c], s))
          cols |= bit_of(c);
      if (cols == 0) out.push_back(FileId{Axis::Y, r, s});
    }
  for (int c = 1; c <= order_; ++c)
    for (int s = 1; s <= order_; ++s) {
      if (has_bit(x_occ_[c], s)) continue;
      Mask rows = 0;
      for (int r = 1; r <= order_; ++r)
        if (!has_bit(z_occ_[r], c) && !has_bit(y_occ_[r], s))
          rows |= bit_of(r);
      if (rows == 0) out.push_back(FileId{Axis::X, c, s});
    }
  return out;
}

bool Board::has_eliminated_file() const { return !eliminated_files().empty(); }

int Board::rooks_in(const Brick& t) const {
  if (t.order != order_) fail("brick order does not match the board");
  int count = 0;
  for (const Cell& r : rooks_)
    if (t.contains(r)) ++count;
  return count;
}

int Board::rooks_in_layer(int sym, Mask rows, Mask cols) const {
  int count = 0;
  for (int r : Bits(rows))
    if (has_bit(y_occ_[r], sym)) {
      // The row holds sym somewhere; find its column.
      for (int c : Bits(z_occ_[r] & cols))
        if (sym_at(r, c) == sym) {
          ++count;
          break;
        }
    }
  return count;
}

bool Board::is_perfect(const Brick& t) const {
  if (t.order != order_) fail("brick order does not match the board");
  for (int r : Bits(t.rows))
    for (int c : Bits(t.cols))
      if (dot_syms(r, c) & t.syms) return false;
  return true;
}

Board conjugated(const Board& p, const ConjPerm& perm) {
  std::vector<Cell> cells;
  cells.reserve(p.rooks().size());
  for (const Cell& c : p.rooks()) cells.push_back(apply_conj(perm, c));
  return Board(p.order(), cells);
}

static void check_perm(int order, std::span<const int> perm,
                       const char* which) {
  if (static_cast<int>(perm.size()) != order)
    fail(std::string(which) + " permutation has wrong length");
  Mask seen = 0;
  for (int v : perm) {
    if (v < 1 || v > order || has_bit(seen, v))
      fail(std::string(which) + " permutation is not a bijection on 1.." +
           std::to_string(order));
    seen |= bit_of(v);
  }
}

Board apply_isotopy(const Board& p, std::span<const int> row_perm,
                    std::span<const int> col_perm,
                    std::span<const int> sym_perm) {
  check_perm(p.order(), row_perm, "row");
  check_perm(p.order(), col_perm, "column");
  check_perm(p.order(), sym_perm, "symbol");
  std::vector<Cell> cells;
  cells.reserve(p.rooks().size());
  for (const Cell& c : p.rooks())
    cells.push_back(
        Cell{row_perm[c.row - 1], col_perm[c.col - 1], sym_perm[c.sym - 1]});
  return Board(p.order(), cells);
}

ExtensionKind extension_relation(const Board& p, const Board& q) {
  if (q.order() < p.order()) fail("extension candidate has smaller order");
  for (const Cell& c : p.rooks())
    if (q.sym_at(c.row, c.col) != c.sym) return ExtensionKind::none;
  if (q.order() == p.order()) {
    if (q.is_completion()) return ExtensionKind::completion;
    return ExtensionKind::expansion;
  }
  // Larger order: does Q add cells outside P's support?
  if (q.rook_count() == p.rook_count()) return ExtensionKind::embedding;
  return ExtensionKind::extension;
}

long long empty_files(const Board& p, const Brick& t, Axis dir) {
  if (t.order != p.order()) fail("brick order does not match the board");
  if (!t.full_extent(dir))
    fail("brick " + to_string(t) + " does not span the board along " +
         axis_name(dir));
  long long empty = 0;
  switch (dir) {
    case Axis::Z:
      for (int r : Bits(t.rows))
        empty += popcount(t.cols & ~p.z_file_cols(r));
      break;
    case Axis::Y:
      for (int r : Bits(t.rows))
        empty += popcount(t.syms & ~p.y_file_syms(r));
      break;
    case Axis::X:
      for (int c : Bits(t.cols))
        empty += popcount(t.syms & ~p.x_file_syms(c));
      break;
  }
  return empty;
}

long long empty_files(const Board& p, const Brick& x, const Brick& y,
                      Axis dir) {
  return empty_files(p, brick_union(x, y), dir);
}

std::string board_hash(const Board& p) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(p.order()));
  for (const Cell& c : p.rooks()) {
    mix(static_cast<std::uint64_t>(c.row));
    mix(static_cast<std::uint64_t>(c.col));
    mix(static_cast<std::uint64_t>(c.sym));
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace plsc
