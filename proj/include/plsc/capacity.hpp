#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "plsc/board.hpp"
#include "plsc/brick.hpp"

namespace plsc {

// Maximum number of rooks a completion can place inside the union of an
// a x b x c brick and its remote mate:
//   cap(n,a,b,c) = n^2 - (a+b+c)n + ab + bc + ca
//                = (abc + (n-a)(n-b)(n-c)) / n.
int capacity(int n, int a, int b, int c);

// A brick together with its remote mate (componentwise complement).
struct RemoteCouple {
  Brick t0;
  Brick t3;

  static RemoteCouple around(const Brick& t0) {
    return RemoteCouple{t0, t0.complemented()};
  }
  bool degenerate() const { return t0.degenerate(); }
};

int capacity(const RemoteCouple&);

// cap - (rooks in t0 + rooks in t3); negative means overloaded, hence
// incompletable.
int deficit(const Board&, const RemoteCouple&);

bool is_stuffed(const Board&, const RemoteCouple&);     // deficit == 0
bool is_overloaded(const Board&, const RemoteCouple&);  // deficit < 0

// Remote axis couple in the z direction: V = rows x cols x full and its
// mate W.  Every brick pair (T0, T2ab) hinges on such an axis.
struct AxisCouple {
  int order = 0;
  Mask rows = 0;
  Mask cols = 0;

  Brick v() const { return Brick{order, rows, cols, full_mask(order)}; }
  Brick w() const {
    const Mask f = full_mask(order);
    return Brick{order, rows ^ f, cols ^ f, f};
  }
};

// Directed weight of one layer: (a + b - n) - [N(sym,V) - N(sym,W)].
// Positive means the V side is underweighted in that layer.
int layer_weight_deficit(const Board&, const AxisCouple&, int sym);

// Sum over all n layers; equals E_z(V) - E_z(W).
int weight_deficit(const Board&, const AxisCouple&);

// Sum over t0's symbol layers only: the directed weight of (T0, T2ab).
int weight_deficit(const Board&, const Brick& t0);

// ---- Conservation-law audits -------------------------------------------
//
// Each audit recomputes both sides of an exact integer identity from
// scratch (file scans on one side, rook counts and closed forms on the
// other).  They hold for every board and every brick.

struct IdentityAudit {
  std::string name;
  long long lhs = 0;
  long long rhs = 0;
  bool ok() const { return lhs == rhs; }
};

IdentityAudit audit_weight_via_files(const Board&, const Brick& t0);
IdentityAudit audit_rook_balance(const Board&, const Brick& t0);
IdentityAudit audit_weight_plus_mate(const Board&, const Brick& t0);
IdentityAudit audit_hinge_deficit(const Board&, const Brick& t0);
IdentityAudit audit_five_axes_deficit(const Board&, const Brick& t0);
IdentityAudit audit_three_axes_deficit(const Board&, const Brick& t0);
IdentityAudit audit_five_axes_volume(const Brick& t0);
IdentityAudit audit_five_axes_capacity(const Brick& t0);
IdentityAudit audit_three_axes_volume(const Brick& t0);
IdentityAudit audit_three_axes_capacity(const Brick& t0);

std::vector<IdentityAudit> run_identity_audits(const Board&, const Brick& t0);

// ---- Capacity-condition check ------------------------------------------

struct DeficitReport {
  Axis dir = Axis::Z;  // hinge direction of the witness couple
  Mask rows = 0, cols = 0, layers = 0;  // the witness t0, board coordinates
  int deficit = 0;
  int cap = 0;
  int c0 = 0;
  int c3 = 0;
  bool violated() const { return deficit < 0; }
};

// Minimum deficit over every remote couple hinged on the z-axis
// rows x ~cols x full, found greedily layer by layer.
DeficitReport axis_min_deficit(const Board&, Mask rows, Mask cols_bar);

int default_exhaustive_bound();  // 6, PLSC_EXHAUSTIVE_BOUND overrides

struct CheckOptions {
  enum class Mode { exhaustive, randomized };
  Mode mode = Mode::exhaustive;
  int exhaustive_bound = default_exhaustive_bound();
  bool all_orientations = true;  // scan the three hinge directions
  bool merge_profiles = true;    // collapse interchangeable rows/cols
  std::uint64_t samples = 20000;  // randomized mode
  std::uint64_t seed = 1;
};

// Minimum deficit over every remote couple of the board (exhaustive mode),
// or over a random sample of hinge axes.  deficit < 0 proves the board
// incompletable.
DeficitReport check_capacity(const Board&, const CheckOptions& = {});

// ---- Layer balance ------------------------------------------------------

// A perfect brick R x C x {sym} whose couple is underweighted; such a
// violation makes the layer (hence the board) incompletable.
struct BalanceViolation {
  Mask rows = 0, cols = 0;
  int dw = 0;
};

struct BalanceReport {
  int sym = 0;
  bool exhaustive = true;
  std::vector<BalanceViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Exhaustive within the order bound; above it, errors unless heuristic
// mode is allowed (greedy maximal perfect bricks; sound but incomplete).
struct BalanceOptions {
  int exhaustive_bound = default_exhaustive_bound();
  bool allow_heuristic = false;
  int heuristic_restarts = 64;
  std::uint64_t seed = 1;
};

BalanceReport balance_condition(const Board&, int sym,
                                const BalanceOptions& = {});

}  // namespace plsc
