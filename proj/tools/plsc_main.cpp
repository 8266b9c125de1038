#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "plsc/extremal.hpp"
#include "plsc/io.hpp"
#include "plsc/solver.hpp"

using namespace plsc;

namespace {

// Exit codes: 0 fine, 1 verification found something, 2 capacity violation,
// 3 incompletable, 64 bad input, 65 refused exhaustive bound.
constexpr int kExitViolated = 2;
constexpr int kExitIncompletable = 3;
constexpr int kExitBadInput = 64;
constexpr int kExitBound = 65;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) fail_parse("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Board load_board(const std::string& path, int order) {
  return parse_board_auto(read_input(path), order,
                          path == "-" ? "stdin" : path);
}

// Subset syntax: comma-separated values and ranges, "1,3,5-7".
Mask parse_subset(const std::string& spec, int n, const std::string& what) {
  Mask m = 0;
  std::istringstream ss(spec);
  std::string item;
  auto value = [&](const std::string& tok) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used == tok.size() && v >= 1 && v <= n) return v;
    } catch (const std::exception&) {
    }
    fail_parse(what + ": bad value '" + tok + "' (want 1.." +
               std::to_string(n) + ")");
  };
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto dash = item.find('-');
    if (dash == std::string::npos) {
      m |= bit_of(value(item));
    } else {
      const int lo = value(item.substr(0, dash));
      const int hi = value(item.substr(dash + 1));
      if (lo > hi) fail_parse(what + ": empty range '" + item + "'");
      for (int v = lo; v <= hi; ++v) m |= bit_of(v);
    }
  }
  return m;
}

Brick parse_brick(const std::string& spec, int n) {
  std::vector<std::string> parts;
  std::istringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ';')) parts.push_back(part);
  if (parts.size() != 3)
    fail_parse("--brick wants 'rows;cols;syms', got '" + spec + "'");
  return Brick{n, parse_subset(parts[0], n, "--brick rows"),
               parse_subset(parts[1], n, "--brick cols"),
               parse_subset(parts[2], n, "--brick syms")};
}

ConjPerm parse_perm(const std::string& name) {
  // Letter i/j/k = original row/col/sym; position = new coordinate.
  if (name == "ijk") return {0, 1, 2};
  if (name == "kij") return {2, 0, 1};
  if (name == "jki") return {1, 2, 0};
  if (name == "ikj") return {0, 2, 1};
  if (name == "kji") return {2, 1, 0};
  if (name == "jik") return {1, 0, 2};
  fail_parse("unknown coordinate order '" + name +
             "' (want one of ijk kij jki ikj kji jik)");
}

std::string join_values(Mask m) {
  std::string out;
  for (int v : Bits(m)) {
    if (!out.empty()) out += ",";
    out += std::to_string(v);
  }
  return out.empty() ? "-" : out;
}

void print_deficit_report(const DeficitReport& rep) {
  std::cout << "couple  rows " << join_values(rep.rows) << "  cols "
            << join_values(rep.cols) << "  syms " << join_values(rep.layers)
            << "  (hinge " << axis_name(rep.dir) << ")\n"
            << "cap " << rep.cap << "  near " << rep.c0 << "  far " << rep.c3
            << "  deficit " << rep.deficit << "\n"
            << (rep.violated() ? "over capacity: incompletable\n"
                               : "within capacity\n");
}

struct CheckArgs {
  std::string input = "-";
  int order = 0;
  std::string mode = "exhaustive";
  int bound = 0;
  std::uint64_t samples = 20000;
  std::uint64_t seed = 1;
  bool json_out = false;
};

int run_check(const CheckArgs& a) {
  const Board p = load_board(a.input, a.order);
  CheckOptions opt;
  if (a.mode == "randomized") opt.mode = CheckOptions::Mode::randomized;
  if (a.bound > 0) opt.exhaustive_bound = a.bound;
  opt.samples = a.samples;
  opt.seed = a.seed;
  const DeficitReport rep = check_capacity(p, opt);
  if (a.json_out)
    std::cout << deficit_report_json(rep, p).dump(2) << "\n";
  else
    print_deficit_report(rep);
  return rep.violated() ? kExitViolated : 0;
}

int run_complete(const std::string& input, int order, bool json_out) {
  const Board p = load_board(input, order);
  const auto done = complete(p);
  if (json_out) {
    json j{{"completable", done.has_value()}, {"grid", nullptr}};
    if (done) {
      j["grid"] = json::array();
      std::istringstream ss(to_grid(*done));
      std::string line;
      std::getline(ss, line);
      while (std::getline(ss, line)) j["grid"].push_back(line);
    }
    std::cout << j.dump(2) << "\n";
  } else if (done) {
    std::cout << to_grid(*done);
  } else {
    std::cout << "incompletable\n";
  }
  return done ? 0 : kExitIncompletable;
}

int run_classify(int n, bool json_out) {
  if (json_out) {
    std::cout << classification_json(n).dump(2) << "\n";
    return 0;
  }
  const auto mins = min_capacity_points(n);
  const auto seconds = second_min_capacity_points(n);
  std::cout << "order " << n << "\n"
            << "smallest capacity " << capacity(n, mins[0].a, mins[0].b,
                                                mins[0].c)
            << " at " << mins.size() << " side triples:\n ";
  for (const SidePoint& p : mins) std::cout << " " << to_string(p);
  std::cout << "\n";
  if (seconds.empty()) {
    std::cout << "no second capacity value\n";
    return 0;
  }
  std::cout << "next capacity "
            << capacity(n, seconds[0].a, seconds[0].b, seconds[0].c) << " at "
            << seconds.size() << " side triples:\n ";
  for (const SidePoint& p : seconds) std::cout << " " << to_string(p);
  std::cout << "\n";
  return 0;
}

struct FamilyArgs {
  std::string family;
  FamilyParams prm;
  std::string symbols;
  bool json_out = false;
};

int run_gen_family(FamilyArgs& a) {
  if (!a.symbols.empty()) {
    std::istringstream ss(a.symbols);
    std::string tok;
    std::vector<int> vals;
    while (std::getline(ss, tok, ',')) {
      try {
        vals.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        fail_parse("--symbols wants four integers 'A,B,C,D'");
      }
    }
    if (vals.size() != 4) fail_parse("--symbols wants four integers 'A,B,C,D'");
    a.prm.sym_a = vals[0], a.prm.sym_b = vals[1];
    a.prm.sym_c = vals[2], a.prm.sym_d = vals[3];
  }
  const FamilyInstance fam = make_family(family_from_name(a.family), a.prm);
  if (a.json_out) {
    json j{{"family", family_name(family_from_name(a.family))},
           {"order", fam.board.order()},
           {"grid", json::array()},
           {"couple",
            {{"rows", mask_values(fam.t0.rows)},
             {"cols", mask_values(fam.t0.cols)},
             {"syms", mask_values(fam.t0.syms)}}},
           {"last_rook",
            json::array({fam.last_rook.row, fam.last_rook.col,
                         fam.last_rook.sym})}};
    std::istringstream ss(to_grid(fam.board));
    std::string line;
    std::getline(ss, line);
    while (std::getline(ss, line)) j["grid"].push_back(line);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << to_grid(fam.board);
  }
  return 0;
}

int run_verify_theorem(int n, int max_rooks, bool dedup, bool json_out) {
  VerifyOptions opt;
  opt.dedup = dedup;
  const VerifyReport rep = verify_completability_theorem(n, max_rooks, opt);
  if (json_out) {
    std::cout << verify_report_json(rep).dump(2) << "\n";
  } else {
    std::cout << "order " << n << (rep.dedup ? " (classes)" : "") << ": "
              << rep.boards << " boards, " << rep.completable
              << " completable, " << rep.violations
              << " capacity violations\n";
    for (const RookTally& t : rep.by_rooks)
      std::cout << "  " << t.rooks << " rooks: " << t.boards << " boards, "
                << t.completable << " completable, "
                << (t.boards - t.capacity_ok) << " violations\n";
    std::cout << (rep.ok() ? "completable and within-capacity coincide\n"
                           : "DISCREPANCIES FOUND\n");
  }
  return rep.ok() ? 0 : 1;
}

int run_verify_bound(int n, std::uint64_t samples, std::uint64_t seed,
                     bool json_out) {
  const VerifyReport rep = verify_small_board_bound(n, samples, seed);
  if (json_out) {
    std::cout << verify_report_json(rep).dump(2) << "\n";
  } else {
    std::cout << "order " << n << ": " << rep.boards << " boards with at most "
              << (n - 1) << " rooks, " << rep.violations
              << " capacity violations\n";
  }
  return rep.violations == 0 ? 0 : 1;
}

int run_audits(const std::string& input, int order, const std::string& brick,
               bool json_out) {
  const Board p = load_board(input, order);
  const Brick t0 = parse_brick(brick, p.order());
  const auto audits = run_identity_audits(p, t0);
  bool all_ok = true;
  if (json_out) {
    std::cout << identity_audits_json(audits, p, t0).dump(2) << "\n";
    for (const IdentityAudit& a : audits) all_ok = all_ok && a.ok();
  } else {
    for (const IdentityAudit& a : audits) {
      std::cout << (a.ok() ? "   ok  " : " FAIL  ") << a.name << "  lhs "
                << a.lhs << "  rhs " << a.rhs << "\n";
      all_ok = all_ok && a.ok();
    }
  }
  return all_ok ? 0 : 1;
}

int run_conjugate(const std::string& input, int order,
                  const std::string& perm) {
  const Board p = load_board(input, order);
  std::cout << to_grid(conjugated(p, parse_perm(perm)));
  return 0;
}

int run_find(int n, int min_rooks, int max_rooks, std::uint64_t limit,
             bool json_out) {
  const CounterexampleReport rep =
      find_counterexamples(n, min_rooks, max_rooks, limit);
  if (json_out) {
    std::cout << counterexample_report_json(rep).dump(2) << "\n";
  } else {
    std::cout << "order " << n << ": scanned " << rep.classes_scanned
              << " classes, found " << rep.found.size()
              << " within-capacity incompletable boards\n";
    for (const auto& cells : rep.found) {
      for (const Cell& c : cells)
        std::cout << c.row << " " << c.col << " " << c.sym << "  ";
      std::cout << "\n";
    }
  }
  return rep.found.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "partial latin squares as 3-d rook boards: capacity accounting, "
      "obstruction generators, completion search"};
  app.require_subcommand(1);
  std::function<int()> action;

  CheckArgs check_args;
  auto* check = app.add_subcommand(
      "check", "scan every remote couple for a capacity overload");
  check->add_option("input", check_args.input, "board file, '-' for stdin");
  check->add_option("--order", check_args.order,
                    "board order for headerless rook lists");
  check->add_option("--mode", check_args.mode, "search strategy")
      ->check(CLI::IsMember({"exhaustive", "randomized"}));
  check->add_option("--bound", check_args.bound,
                    "largest order scanned exhaustively");
  check->add_option("--samples", check_args.samples,
                    "hinge samples in randomized mode");
  check->add_option("--seed", check_args.seed, "randomized-mode seed");
  check->add_flag("--json", check_args.json_out, "JSON report");
  check->callback([&] { action = [&] { return run_check(check_args); }; });

  std::string comp_input = "-";
  int comp_order = 0;
  bool comp_json = false;
  auto* comp = app.add_subcommand("complete",
                                  "fill the board into a full square");
  comp->add_option("input", comp_input, "board file, '-' for stdin");
  comp->add_option("--order", comp_order, "order for headerless rook lists");
  comp->add_flag("--json", comp_json, "JSON report");
  comp->callback([&] {
    action = [&] { return run_complete(comp_input, comp_order, comp_json); };
  });

  int cls_n = 0;
  bool cls_json = false;
  auto* cls = app.add_subcommand(
      "classify", "side triples of smallest and second-smallest capacity");
  cls->add_option("--n", cls_n, "board order")->required();
  cls->add_flag("--json", cls_json, "JSON report");
  cls->callback([&] { action = [&] { return run_classify(cls_n, cls_json); }; });

  FamilyArgs fam_args;
  auto* fam = app.add_subcommand("gen-family",
                                 "emit a minimally overloaded board");
  fam->add_option("--family", fam_args.family, "F1, F2, F3 or F4")
      ->required();
  fam->add_option("--n", fam_args.prm.n, "board order")->required();
  fam->add_option("--k", fam_args.prm.k, "F2 diagonal length");
  fam->add_option("--far-row", fam_args.prm.far_row, "F1 far rook row");
  fam->add_option("--symbols", fam_args.symbols,
                  "F4 corner symbols 'A,B,C,D'");
  fam->add_flag("--json", fam_args.json_out, "JSON output");
  fam->callback([&] { action = [&] { return run_gen_family(fam_args); }; });

  int vt_n = 0, vt_max = -1;
  bool vt_dedup = false, vt_json = false;
  auto* vt = app.add_subcommand(
      "verify-theorem",
      "exhaustively match completability against the capacity condition");
  vt->add_option("--n", vt_n, "board order")->required();
  vt->add_option("--max-rooks", vt_max, "rook-count ceiling (default n+1)");
  vt->add_flag("--dedup", vt_dedup, "walk class representatives only");
  vt->add_flag("--json", vt_json, "JSON report");
  vt->callback([&] {
    action = [&] { return run_verify_theorem(vt_n, vt_max, vt_dedup, vt_json); };
  });

  int vb_n = 0;
  std::uint64_t vb_samples = 0, vb_seed = 1;
  bool vb_json = false;
  auto* vb = app.add_subcommand(
      "verify-bound",
      "confirm boards below n rooks never break the capacity condition");
  vb->add_option("--n", vb_n, "board order")->required();
  vb->add_option("--samples", vb_samples,
                 "random boards to draw (0: exhaustive)");
  vb->add_option("--seed", vb_seed, "sampling seed");
  vb->add_flag("--json", vb_json, "JSON report");
  vb->callback([&] {
    action = [&] { return run_verify_bound(vb_n, vb_samples, vb_seed, vb_json); };
  });

  std::string au_input = "-", au_brick;
  int au_order = 0;
  bool au_json = false;
  auto* au = app.add_subcommand(
      "audit-identities",
      "recompute both sides of the file-count conservation laws");
  au->add_option("input", au_input, "board file, '-' for stdin");
  au->add_option("--order", au_order, "order for headerless rook lists");
  au->add_option("--brick", au_brick, "near brick as 'rows;cols;syms'")
      ->required();
  au->add_flag("--json", au_json, "JSON report");
  au->callback([&] {
    action = [&] { return run_audits(au_input, au_order, au_brick, au_json); };
  });

  std::string cj_input = "-", cj_perm = "kij";
  int cj_order = 0;
  auto* cj = app.add_subcommand("conjugate",
                                "permute the coordinate roles of a board");
  cj->add_option("input", cj_input, "board file, '-' for stdin");
  cj->add_option("--order", cj_order, "order for headerless rook lists");
  cj->add_option("--perm", cj_perm, "new coordinate order, e.g. kij");
  cj->callback([&] {
    action = [&] { return run_conjugate(cj_input, cj_order, cj_perm); };
  });

  int fc_n = 0, fc_min = 0, fc_max = -1;
  std::uint64_t fc_limit = 10;
  bool fc_json = false;
  auto* fc = app.add_subcommand(
      "find-counterexample",
      "hunt for within-capacity boards that still cannot be completed");
  fc->add_option("--n", fc_n, "board order")->required();
  fc->add_option("--min-rooks", fc_min, "smallest rook count scanned");
  fc->add_option("--max-rooks", fc_max, "largest rook count scanned");
  fc->add_option("--limit", fc_limit, "stop after this many finds");
  fc->add_flag("--json", fc_json, "JSON report");
  fc->callback([&] {
    action = [&] {
      return run_find(fc_n, fc_min, fc_max, fc_limit, fc_json);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  }
  try {
    return action();
  } catch (const BoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBound;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}
