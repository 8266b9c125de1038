#include "plsc/solver.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <map>
#include <random>

#include "plsc/capacity.hpp"

namespace plsc {

// ---- exact cover --------------------------------------------------------

CompletionSolver::CompletionSolver(int order) : order_(order) {
  if (order < 2 || order > kMaxOrder)
    fail("solver order " + std::to_string(order) + " out of range");
  const int n = order;
  const int cols = 3 * n * n;
  const int cells = n * n * n;
  nodes_store_.reserve(1 + cols + 3 * cells);
  col_size_.assign(cols, 0);
  row_start_.assign(cells, 0);

  // Root and column heads, linked left-right.
  nodes_store_.push_back(Node{0, 0, 0, 0, -1, -1});
  for (int c = 0; c < cols; ++c) {
    const int id = col_head(c);
    nodes_store_.push_back(Node{id - 1, 0, id, id, -1, -1});
    nodes_store_[id - 1].r = id;
  }
  nodes_store_[0].l = col_head(cols - 1);
  nodes_store_[col_head(cols - 1)].r = 0;

  auto append = [&](int col, int cell) {
    const int id = static_cast<int>(nodes_store_.size());
    const int head = col_head(col);
    Node nd{};
    nd.col = col;
    nd.cell = cell;
    nd.u = nodes_store_[head].u;
    nd.d = head;
    nodes_store_.push_back(nd);
    nodes_store_[nd.u].d = id;
    nodes_store_[head].u = id;
    ++col_size_[col];
    return id;
  };

  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c)
      for (int s = 1; s <= n; ++s) {
        const int cell = ((r - 1) * n + (c - 1)) * n + (s - 1);
        const int zc = (r - 1) * n + (c - 1);
        const int yc = n * n + (r - 1) * n + (s - 1);
        const int xc = 2 * n * n + (c - 1) * n + (s - 1);
        const int a = append(zc, cell);
        const int b = append(yc, cell);
        const int d = append(xc, cell);
        nodes_store_[a].l = d, nodes_store_[a].r = b;
        nodes_store_[b].l = a, nodes_store_[b].r = d;
        nodes_store_[d].l = b, nodes_store_[d].r = a;
        row_start_[cell] = a;
      }
}

void CompletionSolver::cover(int c) {
  auto& nd = nodes_store_;
  const int head = col_head(c);
  nd[nd[head].r].l = nd[head].l;
  nd[nd[head].l].r = nd[head].r;
  for (int i = nd[head].d; i != head; i = nd[i].d)
    for (int j = nd[i].r; j != i; j = nd[j].r) {
      nd[nd[j].d].u = nd[j].u;
      nd[nd[j].u].d = nd[j].d;
      --col_size_[nd[j].col];
    }
}

void CompletionSolver::uncover(int c) {
  auto& nd = nodes_store_;
  const int head = col_head(c);
  for (int i = nd[head].u; i != head; i = nd[i].u)
    for (int j = nd[i].l; j != i; j = nd[j].l) {
      ++col_size_[nd[j].col];
      nd[nd[j].d].u = j;
      nd[nd[j].u].d = j;
    }
  nd[nd[head].r].l = head;
  nd[nd[head].l].r = head;
}

bool CompletionSolver::load(std::span<const Cell> rooks,
                            std::vector<int>* covered) {
  const int n = order_;
  for (const Cell& rk : rooks) {
    if (rk.row < 1 || rk.row > n || rk.col < 1 || rk.col > n || rk.sym < 1 ||
        rk.sym > n)
      fail("cell " + to_string(rk) + " outside the order-" +
           std::to_string(n) + " board");
    const int ids[3] = {(rk.row - 1) * n + (rk.col - 1),
                        n * n + (rk.row - 1) * n + (rk.sym - 1),
                        2 * n * n + (rk.col - 1) * n + (rk.sym - 1)};
    for (int c : ids) {
      // A covered column here means two input rooks share a file.
      const int head = col_head(c);
      const bool active =
          nodes_store_[nodes_store_[head].l].r == head;
      if (!active) return false;
      cover(c);
      covered->push_back(c);
    }
  }
  return true;
}

void CompletionSolver::unload(const std::vector<int>& covered) {
  for (auto it = covered.rbegin(); it != covered.rend(); ++it) uncover(*it);
}

bool CompletionSolver::search(std::vector<int>* picked) {
  auto& nd = nodes_store_;
  if (nd[0].r == 0) return true;
  int best = -1, best_size = INT_MAX;
  for (int h = nd[0].r; h != 0; h = nd[h].r) {
    const int sz = col_size_[h - 1];
    if (sz < best_size) {
      best_size = sz;
      best = h - 1;
      if (sz == 0) return false;
    }
  }
  cover(best);
  const int head = col_head(best);
  for (int i = nd[head].d; i != head; i = nd[i].d) {
    ++nodes_;
    if (picked) picked->push_back(nd[i].cell);
    for (int j = nd[i].r; j != i; j = nd[j].r) cover(nd[j].col);
    if (search(picked)) {
      for (int j = nd[i].l; j != i; j = nd[j].l) uncover(nd[j].col);
      uncover(best);
      return true;
    }
    for (int j = nd[i].l; j != i; j = nd[j].l) uncover(nd[j].col);
    if (picked) picked->pop_back();
  }
  uncover(best);
  return false;
}

bool CompletionSolver::completable(std::span<const Cell> rooks) {
  std::vector<int> covered;
  covered.reserve(rooks.size() * 3);
  if (!load(rooks, &covered)) {
    unload(covered);
    return false;
  }
  const bool found = search(nullptr);
  unload(covered);
  return found;
}

std::optional<std::vector<Cell>> CompletionSolver::solve(
    std::span<const Cell> rooks) {
  std::vector<int> covered;
  covered.reserve(rooks.size() * 3);
  if (!load(rooks, &covered)) {
    unload(covered);
    return std::nullopt;
  }
  std::vector<int> picked;
  const bool found = search(&picked);
  unload(covered);
  if (!found) return std::nullopt;
  const int n = order_;
  std::vector<Cell> out(rooks.begin(), rooks.end());
  for (int cell : picked) {
    const int s = cell % n;
    const int c = (cell / n) % n;
    const int r = cell / (n * n);
    out.push_back(Cell{r + 1, c + 1, s + 1});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Board> complete(const Board& p) {
  CompletionSolver solver(p.order());
  auto cells = solver.solve(p.rooks());
  if (!cells) return std::nullopt;
  Board out(p.order(), *cells);
  if (extension_relation(p, out) != ExtensionKind::completion)
    fail("internal: completion does not extend its input");
  return out;
}

bool is_completable(const Board& p) {
  if (p.has_eliminated_file()) return false;
  CompletionSolver solver(p.order());
  return solver.completable(p.rooks());
}

bool layer_completable(const Board& p, int sym) {
  const int n = p.order();
  if (sym < 1 || sym > n) fail("layer index out of range");
  // Row r may end up holding sym in column c iff a rook already says so or
  // the cell is a dot; the layer extends to a permutation iff a perfect
  // matching exists.
  Mask used_cols = 0;
  for (int c = 1; c <= n; ++c)
    if (has_bit(p.x_file_syms(c), sym)) used_cols |= bit_of(c);
  std::vector<Mask> adj(n + 1, 0);
  for (int r = 1; r <= n; ++r) {
    if (has_bit(p.y_file_syms(r), sym)) {
      for (int c = 1; c <= n; ++c)
        if (p.sym_at(r, c) == sym) adj[r] = bit_of(c);
    } else {
      adj[r] = full_mask(n) & ~p.z_file_cols(r) & ~used_cols;
    }
  }
  std::vector<int> match_col(n + 1, 0);  // col -> row
  std::vector<char> seen(n + 1, 0);
  std::function<bool(int)> augment = [&](int r) -> bool {
    for (int c : Bits(adj[r])) {
      if (seen[c]) continue;
      seen[c] = 1;
      if (match_col[c] == 0 || augment(match_col[c])) {
        match_col[c] = r;
        return true;
      }
    }
    return false;
  };
  for (int r = 1; r <= n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    if (!augment(r)) return false;
  }
  return true;
}

// ---- canonical form -----------------------------------------------------

namespace {

// Lexicographically least relabeling of a fixed conjugate: assign fresh
// row/col/sym labels greedily along the sorted image, branching on ties.
class Relabeler {
 public:
  Relabeler(int n, std::span<const Cell> cells) : n_(n), k_(cells.size()) {
    cells_.assign(cells.begin(), cells.end());
    rmap_.assign(n + 1, 0);
    cmap_.assign(n + 1, 0);
    smap_.assign(n + 1, 0);
    used_.assign(k_, 0);
  }

  std::vector<Cell> run() {
    if (k_ == 0) return {};
    cur_.reserve(k_);
    rec(0, true);
    return best_;
  }

 private:
  Cell tentative(const Cell& c) const {
    return Cell{rmap_[c.row] ? rmap_[c.row] : nr_ + 1,
                cmap_[c.col] ? cmap_[c.col] : nc_ + 1,
                smap_[c.sym] ? smap_[c.sym] : ns_ + 1};
  }

  void rec(std::size_t pos, bool tight) {
    if (pos == k_) {
      if (best_.empty() || cur_ < best_) best_ = cur_;
      return;
    }
    Cell m{INT_MAX, INT_MAX, INT_MAX};
    for (std::size_t i = 0; i < k_; ++i)
      if (!used_[i]) m = std::min(m, tentative(cells_[i]));
    bool child_tight = tight;
    if (tight && !best_.empty()) {
      if (best_[pos] < m) return;
      child_tight = (m == best_[pos]);
    }
    for (std::size_t i = 0; i < k_; ++i) {
      if (used_[i] || tentative(cells_[i]) != m) continue;
      const Cell& c = cells_[i];
      const bool fr = rmap_[c.row] == 0, fc = cmap_[c.col] == 0,
                 fs = smap_[c.sym] == 0;
      if (fr) rmap_[c.row] = ++nr_;
      if (fc) cmap_[c.col] = ++nc_;
      if (fs) smap_[c.sym] = ++ns_;
      used_[i] = 1;
      cur_.push_back(m);
      rec(pos + 1, child_tight);
      cur_.pop_back();
      used_[i] = 0;
      if (fr) rmap_[c.row] = 0, --nr_;
      if (fc) cmap_[c.col] = 0, --nc_;
      if (fs) smap_[c.sym] = 0, --ns_;
    }
  }

  int n_;
  std::size_t k_;
  std::vector<Cell> cells_;
  std::vector<int> rmap_, cmap_, smap_;
  int nr_ = 0, nc_ = 0, ns_ = 0;
  std::vector<char> used_;
  std::vector<Cell> cur_, best_;
};

const ConjPerm kAllConj[6] = {
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
};

std::vector<Cell> canonical_cells(int n, std::span<const Cell> cells) {
  std::vector<Cell> best;
  bool first = true;
  std::vector<Cell> tmp;
  for (const ConjPerm& p : kAllConj) {
    tmp.clear();
    for (const Cell& c : cells) tmp.push_back(apply_conj(p, c));
    std::vector<Cell> cand = Relabeler(n, tmp).run();
    if (first || cand < best) {
      best = std::move(cand);
      first = false;
    }
  }
  return best;
}

std::string key_of(int n, std::span<const Cell> canon) {
  std::string key;
  key.reserve(1 + canon.size() * 3);
  key.push_back(static_cast<char>(n));
  for (const Cell& c : canon) {
    key.push_back(static_cast<char>(c.row));
    key.push_back(static_cast<char>(c.col));
    key.push_back(static_cast<char>(c.sym));
  }
  return key;
}

}  // namespace

std::vector<Cell> canonical_form(const Board& p) {
  return canonical_cells(p.order(), p.rooks());
}

std::string canonical_key(const Board& p) {
  return key_of(p.order(), canonical_form(p));
}

// ---- enumeration --------------------------------------------------------

namespace {

int enum_bound(int requested) {
  return requested > 0 ? requested : default_exhaustive_bound();
}

// Depth-first walk of all boards in cell-lexicographic order; the visitor
// may return false to stop the walk.
class RawEnumerator {
 public:
  RawEnumerator(int n, int max_rooks,
                std::function<bool(std::span<const Cell>)> visit)
      : n_(n), max_rooks_(max_rooks), visit_(std::move(visit)) {
    z_.assign(n + 1, 0);
    y_.assign(n + 1, 0);
    x_.assign(n + 1, 0);
    cells_.reserve(max_rooks > 0 ? max_rooks : 0);
  }

  std::uint64_t visited() const { return visited_; }

  bool run() {
    ++visited_;
    if (!visit_({})) return false;
    return rec(0);
  }

 private:
  bool rec(int start) {
    if (static_cast<int>(cells_.size()) >= max_rooks_) return true;
    const int total = n_ * n_ * n_;
    for (int idx = start; idx < total; ++idx) {
      const int s = idx % n_ + 1;
      const int c = (idx / n_) % n_ + 1;
      const int r = idx / (n_ * n_) + 1;
      if (has_bit(z_[r], c) || has_bit(y_[r], s) || has_bit(x_[c], s))
        continue;
      z_[r] |= bit_of(c), y_[r] |= bit_of(s), x_[c] |= bit_of(s);
      cells_.push_back(Cell{r, c, s});
      ++visited_;
      bool go = visit_(cells_);
      if (go) go = rec(idx + 1);
      cells_.pop_back();
      z_[r] &= ~bit_of(c), y_[r] &= ~bit_of(s), x_[c] &= ~bit_of(s);
      if (!go) return false;
    }
    return true;
  }

  int n_, max_rooks_;
  std::function<bool(std::span<const Cell>)> visit_;
  std::vector<Mask> z_, y_, x_;
  std::vector<Cell> cells_;
  std::uint64_t visited_ = 0;
};

// Breadth-first walk of canonical class representatives, one level of rook
// count at a time.
void enumerate_classes(int n, int max_rooks,
                       const std::function<bool(std::span<const Cell>)>& visit,
                       EnumerationStats* stats) {
  std::vector<std::vector<Cell>> level = {{}};
  if (stats) ++stats->visited;
  if (!visit({})) return;
  if (stats) ++stats->emitted;
  for (int k = 1; k <= max_rooks; ++k) {
    std::map<std::string, std::vector<Cell>> next;
    for (const std::vector<Cell>& rep : level) {
      const Board b(n, rep);
      std::vector<Cell> child = rep;
      child.push_back({});
      for (const Cell& d : b.dots()) {
        child.back() = d;
        if (stats) ++stats->visited;
        std::vector<Cell> canon = canonical_cells(n, child);
        next.emplace(key_of(n, canon), std::move(canon));
      }
    }
    level.clear();
    for (auto& [key, canon] : next) {
      if (stats) ++stats->emitted;
      if (!visit(canon)) return;
      level.push_back(std::move(canon));
    }
    if (level.empty()) break;
  }
}

}  // namespace

void enumerate_boards(int order, int max_rooks, bool dedup,
                      const std::function<void(const Board&)>& visit,
                      EnumerationStats* stats) {
  if (order < 2 || order > kMaxOrder)
    fail("enumeration order " + std::to_string(order) + " out of range");
  const int bound = default_exhaustive_bound();
  if (order > bound)
    fail_bound("exhaustive enumeration refused at order " +
               std::to_string(order) + " (bound " + std::to_string(bound) +
               ")");
  if (max_rooks < 0) max_rooks = order * order;
  auto raw_visit = [&](std::span<const Cell> cells) {
    visit(Board(order, cells));
    return true;
  };
  if (dedup) {
    enumerate_classes(order, max_rooks, raw_visit, stats);
  } else {
    RawEnumerator en(order, max_rooks, raw_visit);
    en.run();
    if (stats) {
      stats->visited = en.visited();
      stats->emitted = en.visited();
    }
  }
}

// ---- fast capacity scan -------------------------------------------------

namespace detail {

// Single-orientation subset scan over layer bitboards (order <= 8).  The
// z-direction hinge axes alone already cover every remote couple.
class FastCapacity {
 public:
  explicit FastCapacity(int n) : n_(n), full_(full_mask(n)) {
    const std::size_t side = std::size_t{1} << n;
    rc_.assign(side * side, 0);
    for (Mask r = 1; r < side; ++r) {
      const int low = std::countr_zero(r);
      for (Mask c = 0; c < side; ++c)
        rc_[r * side + c] =
            rc_[(r & (r - 1)) * side + c] | (static_cast<std::uint64_t>(c)
                                             << (low * n));
    }
  }

  // layers[s-1] holds bit ((r-1)*n + (c-1)) for a rook (r,c,s).
  bool violated(const std::uint64_t* layers) const {
    const std::size_t side = std::size_t{1} << n_;
    for (Mask r = 1; r < full_; ++r) {
      const int a = popcount(r);
      const Mask rb = full_ & ~r;
      for (Mask cb = 1; cb < full_; ++cb) {
        const int nb = popcount(cb);
        const std::uint64_t m0 = rc_[r * side + (full_ & ~cb)];
        const std::uint64_t m2 = rc_[rb * side + cb];
        int sum = 0;
        for (int s = 0; s < n_; ++s)
          sum += std::min(a - popcount(layers[s] & m0),
                          nb - popcount(layers[s] & m2));
        if (sum < a * nb) return true;
      }
    }
    return false;
  }

  void load(std::span<const Cell> cells, std::uint64_t* layers) const {
    for (int s = 0; s < n_; ++s) layers[s] = 0;
    for (const Cell& c : cells)
      layers[c.sym - 1] |=
          std::uint64_t{1} << ((c.row - 1) * n_ + (c.col - 1));
  }

 private:
  int n_;
  Mask full_;
  std::vector<std::uint64_t> rc_;
};

bool capacity_violated_fast(const Board& p) {
  if (p.order() > 8) fail("fast capacity scan supports order <= 8");
  FastCapacity fc(p.order());
  std::uint64_t layers[8];
  fc.load(p.rooks(), layers);
  return fc.violated(layers);
}

}  // namespace detail

// ---- verification harnesses --------------------------------------------

namespace {

struct Checker {
  int n;
  std::optional<detail::FastCapacity> fast;
  std::uint64_t layers[8];

  explicit Checker(int n) : n(n) {
    if (n <= 8) fast.emplace(n);
  }

  bool capacity_ok(std::span<const Cell> cells) {
    if (fast) {
      fast->load(cells, layers);
      return !fast->violated(layers);
    }
    CheckOptions opt;
    opt.exhaustive_bound = kMaxOrder;
    return !check_capacity(Board(n, cells), opt).violated();
  }
};

void note_discrepancy(VerifyReport* rep, int n, std::span<const Cell> cells,
                      bool completable, bool capacity_ok,
                      const VerifyOptions& opt) {
  // Re-derive both verdicts through the public entry points before
  // recording; the fast paths must not be their own judges.
  const Board b(n, cells);
  CheckOptions copt;
  copt.exhaustive_bound = kMaxOrder;
  const bool cap2 = !check_capacity(b, copt).violated();
  const bool comp2 = is_completable(b);
  if (cap2 == comp2) return;  // fast-path disagreement, not a real witness
  if (rep->discrepancies.size() <
      static_cast<std::size_t>(opt.max_discrepancies))
    rep->discrepancies.push_back(
        {{cells.begin(), cells.end()}, comp2, cap2});
  (void)completable;
  (void)capacity_ok;
}

}  // namespace

VerifyReport verify_completability_theorem(int n, int max_rooks,
                                           const VerifyOptions& opt) {
  if (n < 2 || n > kMaxOrder)
    fail("verification order " + std::to_string(n) + " out of range");
  const int bound = enum_bound(opt.exhaustive_bound);
  if (n > bound)
    fail_bound("exhaustive verification refused at order " +
               std::to_string(n) + " (bound " + std::to_string(bound) + ")");
  if (max_rooks < 0) max_rooks = n + 1;

  VerifyReport rep;
  rep.n = n;
  rep.dedup = opt.dedup;
  rep.by_rooks.resize(max_rooks + 1);
  for (int k = 0; k <= max_rooks; ++k) rep.by_rooks[k].rooks = k;

  CompletionSolver solver(n);
  Checker cap(n);

  auto visit = [&](std::span<const Cell> cells) {
    const int k = static_cast<int>(cells.size());
    const bool comp = solver.completable(cells);
    const bool ok = cap.capacity_ok(cells);
    ++rep.boards;
    auto& tally = rep.by_rooks[k];
    ++tally.boards;
    if (comp) {
      ++rep.completable;
      ++tally.completable;
    }
    if (ok) ++tally.capacity_ok;
    if (comp != ok) note_discrepancy(&rep, n, cells, comp, ok, opt);
    return true;
  };

  if (opt.dedup) {
    EnumerationStats stats;
    enumerate_classes(n, max_rooks, visit, &stats);
  } else {
    RawEnumerator en(n, max_rooks, visit);
    en.run();
  }
  // Capacity violations proved incompletable: count them for the tally.
  std::uint64_t viol = 0;
  for (auto& t : rep.by_rooks) viol += t.boards - t.capacity_ok;
  rep.violations = viol;
  return rep;
}

VerifyReport verify_small_board_bound(int n, std::uint64_t samples,
                                      std::uint64_t seed,
                                      const VerifyOptions& opt) {
  if (n < 2 || n > kMaxOrder)
    fail("verification order " + std::to_string(n) + " out of range");
  VerifyReport rep;
  rep.n = n;
  rep.dedup = false;
  const int max_rooks = n - 1;
  rep.by_rooks.resize(max_rooks + 1);
  for (int k = 0; k <= max_rooks; ++k) rep.by_rooks[k].rooks = k;
  Checker cap(n);
  CompletionSolver solver(n);

  auto account = [&](std::span<const Cell> cells) {
    const int k = static_cast<int>(cells.size());
    const bool ok = cap.capacity_ok(cells);
    ++rep.boards;
    ++rep.by_rooks[k].boards;
    if (ok) {
      ++rep.by_rooks[k].capacity_ok;
      return;
    }
    ++rep.violations;
    const bool comp = solver.completable(cells);
    if (comp) ++rep.completable;
    if (rep.discrepancies.size() <
        static_cast<std::size_t>(opt.max_discrepancies))
      rep.discrepancies.push_back({{cells.begin(), cells.end()}, comp, false});
  };

  if (samples == 0) {
    const int bound = enum_bound(opt.exhaustive_bound);
    if (n > bound)
      fail_bound("exhaustive verification refused at order " +
                 std::to_string(n) + " (bound " + std::to_string(bound) +
                 ")");
    RawEnumerator en(n, max_rooks, [&](std::span<const Cell> cells) {
      account(cells);
      return true;
    });
    en.run();
    return rep;
  }

  std::mt19937_64 rng(seed);
  std::vector<Cell> cells;
  std::vector<Mask> z(n + 1), y(n + 1), x(n + 1);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const int k = static_cast<int>(rng() % n);  // 0 .. n-1 rooks
    cells.clear();
    std::fill(z.begin(), z.end(), 0);
    std::fill(y.begin(), y.end(), 0);
    std::fill(x.begin(), x.end(), 0);
    while (static_cast<int>(cells.size()) < k) {
      const int r = static_cast<int>(rng() % n) + 1;
      const int c = static_cast<int>(rng() % n) + 1;
      const int s = static_cast<int>(rng() % n) + 1;
      if (has_bit(z[r], c) || has_bit(y[r], s) || has_bit(x[c], s)) continue;
      z[r] |= bit_of(c), y[r] |= bit_of(s), x[c] |= bit_of(s);
      cells.push_back(Cell{r, c, s});
    }
    std::sort(cells.begin(), cells.end());
    account(cells);
  }
  return rep;
}

CounterexampleReport find_counterexamples(int n, int min_rooks, int max_rooks,
                                          std::uint64_t limit,
                                          const VerifyOptions& opt) {
  if (n < 2 || n > kMaxOrder)
    fail("search order " + std::to_string(n) + " out of range");
  const int bound = enum_bound(opt.exhaustive_bound);
  if (n > bound)
    fail_bound("counterexample search refused at order " + std::to_string(n) +
               " (bound " + std::to_string(bound) + ")");
  if (max_rooks < 0) max_rooks = n * n;
  CounterexampleReport rep;
  rep.n = n;
  CompletionSolver solver(n);
  Checker cap(n);
  enumerate_classes(n, max_rooks, [&](std::span<const Cell> cells) {
    if (static_cast<int>(cells.size()) < min_rooks) return true;
    ++rep.classes_scanned;
    if (!cap.capacity_ok(cells)) return true;
    if (solver.completable(cells)) return true;
    rep.found.emplace_back(cells.begin(), cells.end());
    return rep.found.size() < limit;
  }, nullptr);
  return rep;
}

}  // namespace plsc
