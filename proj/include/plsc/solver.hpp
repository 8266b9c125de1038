#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "plsc/board.hpp"

namespace plsc {

// Reusable exact-cover engine for one board order.  The cover matrix has a
// column per file (3n^2) and a row per cell (n^3); a board is loaded by
// covering its rooks' columns, solved, then unloaded, so one instance can
// sweep millions of boards without allocation.
class CompletionSolver {
 public:
  explicit CompletionSolver(int order);

  // Any completion of the rooks, or nullopt.  The cells need not form a
  // valid board; attacking rooks surface as an unsatisfiable matrix.
  bool completable(std::span<const Cell> rooks);
  std::optional<std::vector<Cell>> solve(std::span<const Cell> rooks);

  int order() const { return order_; }
  std::uint64_t nodes_visited() const { return nodes_; }

 private:
  struct Node {
    int l, r, u, d;
    int col;       // owning column head, -1 for the root/heads
    int cell;      // cell index for row nodes
  };

  int col_head(int c) const { return 1 + c; }
  void cover(int c);
  void uncover(int c);
  bool search(std::vector<int>* picked);
  bool load(std::span<const Cell> rooks, std::vector<int>* covered);
  void unload(const std::vector<int>& covered);

  int order_ = 0;
  std::vector<Node> nodes_store_;
  std::vector<int> col_size_;
  std::vector<int> row_start_;  // first node of each cell's row
  std::uint64_t nodes_ = 0;
};

// Completion of P as a Board; validates its own output.
std::optional<Board> complete(const Board&);

// Cheap eliminated-file short circuit, then exact cover.
bool is_completable(const Board&);

// Hall-style check of one symbol layer: can the symbol's rooks extend to a
// full permutation using only dots of that layer?
bool layer_completable(const Board&, int sym);

// ---- enumeration --------------------------------------------------------

struct EnumerationStats {
  std::uint64_t visited = 0;  // boards walked (or classes, when dedup)
  std::uint64_t emitted = 0;
};

// Walks every board of the order with at most max_rooks rooks (the empty
// board included), in cell-lexicographic order; with dedup, exactly one
// representative per equivalence class under the six conjugations composed
// with row/column/symbol relabelings.  Bounded by the exhaustive order
// bound (see capacity options).
void enumerate_boards(int order, int max_rooks, bool dedup,
                      const std::function<void(const Board&)>& visit,
                      EnumerationStats* stats = nullptr);

// Lexicographically least rook list over the full symmetry group; equal
// exactly on equivalent boards.
std::vector<Cell> canonical_form(const Board&);
std::string canonical_key(const Board&);

// ---- exhaustive verification -------------------------------------------

struct VerifyOptions {
  bool dedup = false;
  std::uint64_t max_discrepancies = 16;
  int exhaustive_bound = 0;  // 0: use the configured default
};

struct Discrepancy {
  std::vector<Cell> rooks;
  bool completable = false;
  bool capacity_ok = false;
};

struct RookTally {
  int rooks = 0;
  std::uint64_t boards = 0;
  std::uint64_t completable = 0;
  std::uint64_t capacity_ok = 0;
};

struct VerifyReport {
  int n = 0;
  bool dedup = false;
  std::uint64_t boards = 0;
  std::uint64_t completable = 0;
  std::uint64_t violations = 0;  // capacity-condition failures
  std::vector<RookTally> by_rooks;
  std::vector<Discrepancy> discrepancies;
  bool ok() const { return discrepancies.empty(); }
};

// Checks completable <=> capacity condition on every board with at most
// max_rooks rooks (default n+1, where the equivalence is a theorem).
VerifyReport verify_completability_theorem(int n, int max_rooks = -1,
                                           const VerifyOptions& = {});

// Checks that boards with at most n-1 rooks never violate the capacity
// condition: exhaustively, or on random boards when samples > 0.
VerifyReport verify_small_board_bound(int n, std::uint64_t samples = 0,
                                      std::uint64_t seed = 1,
                                      const VerifyOptions& = {});

// Searches for a capacity-clean yet incompletable board, the smallest
// witnesses that the necessary condition is not sufficient.  Scans class
// representatives with rook counts in [min_rooks, max_rooks].
struct CounterexampleReport {
  int n = 0;
  std::uint64_t classes_scanned = 0;
  std::vector<std::vector<Cell>> found;
};

CounterexampleReport find_counterexamples(int n, int min_rooks, int max_rooks,
                                          std::uint64_t limit,
                                          const VerifyOptions& = {});

}  // namespace plsc
