#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plsc/brick.hpp"
#include "plsc/cell.hpp"
#include "plsc/common.hpp"

namespace plsc {

// A partial Latin square of order n as a set of non-attacking rooks on the
// n x n x n board: no two rooks share a file (equivalently, any two rooks
// differ in at least two coordinates).  Immutable; with_rook/without_rook
// return modified copies.
class Board {
 public:
  Board(int order, std::span<const Cell> rooks);

  static Board empty(int order);

  int order() const { return order_; }
  int rook_count() const { return static_cast<int>(rooks_.size()); }
  const std::vector<Cell>& rooks() const { return rooks_; }
  bool is_completion() const {
    return rook_count() == order_ * order_;
  }

  // Symbol placed at (row, col), or 0 when the z-file is empty.
  int sym_at(int row, int col) const { return grid_[row * (order_ + 1) + col]; }

  bool occupied(const Cell& c) const;

  // A dot: empty cell sharing no file with any rook (still placeable).
  bool is_dot(const Cell& c) const;

  // Empty and attacked through at least one file.
  bool eliminated(const Cell& c) const;

  // Symbols s for which (row, col, s) is a dot.
  Mask dot_syms(int row, int col) const;

  std::vector<Cell> dots() const;
  long long dot_count() const;

  Board with_rook(const Cell& c) const;     // errors unless c is a dot
  Board without_rook(const Cell& c) const;  // errors unless c holds a rook

  // Files containing neither a rook nor a dot; any such file makes the
  // board incompletable outright.
  std::vector<FileId> eliminated_files() const;
  bool has_eliminated_file() const;

  int rooks_in(const Brick&) const;
  int rooks_in_layer(int sym, Mask rows, Mask cols) const;

  // No dots inside the brick.
  bool is_perfect(const Brick&) const;

  // Raw per-line occupancy, 1-based outer index.
  Mask z_file_cols(int row) const { return z_occ_[row]; }
  Mask y_file_syms(int row) const { return y_occ_[row]; }
  Mask x_file_syms(int col) const { return x_occ_[col]; }

  auto operator<=>(const Board&) const = default;

 private:
  int order_ = 0;
  std::vector<Cell> rooks_;    // sorted by (row, col, sym)
  std::vector<int> grid_;      // (order+1)^2, sym_at lookup
  std::vector<Mask> z_occ_;    // [row] -> cols holding a rook
  std::vector<Mask> y_occ_;    // [row] -> syms used in the row
  std::vector<Mask> x_occ_;    // [col] -> syms used in the column
};

Board conjugated(const Board&, const ConjPerm&);

// Relabels rows/cols/syms; each permutation maps old value v to perm[v-1].
Board apply_isotopy(const Board&, std::span<const int> row_perm,
                    std::span<const int> col_perm,
                    std::span<const int> sym_perm);

// How Q extends P, when it does.  "Completion" is a full board extending P,
// "expansion" adds rooks at the same order, "embedding" only raises the
// order, "extension" does both.  The strongest applicable label wins.
enum class ExtensionKind { none, extension, embedding, expansion, completion };

ExtensionKind extension_relation(const Board& p, const Board& q);

// Number of empty files of the given direction inside a brick that spans the
// board in that direction; errors otherwise.
long long empty_files(const Board&, const Brick&, Axis dir);
long long empty_files(const Board&, const Brick&, const Brick&, Axis dir);

// FNV-1a over the order and rook list; stable across runs.
std::string board_hash(const Board&);

}  // namespace plsc
