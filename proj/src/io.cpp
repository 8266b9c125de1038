#include "plsc/io.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace plsc {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

bool is_comment_or_blank(const std::string& line) {
  for (char ch : line) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == '#';
  }
  return true;
}

int parse_int(const std::string& tok, const std::string& where) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    fail_parse(where + ": expected an integer, got '" + tok + "'");
  }
  if (used != tok.size())
    fail_parse(where + ": expected an integer, got '" + tok + "'");
  return v;
}

}  // namespace

Board parse_grid(std::istream& in, const std::string& source) {
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!is_comment_or_blank(line)) return true;
    }
    return false;
  };

  if (!next_line()) fail_parse(source + ": empty input, expected an order");
  auto head = tokens_of(line);
  if (head.size() != 1)
    fail_parse(source + ": line " + std::to_string(lineno) +
               ": expected the order alone on the first line");
  const int n =
      parse_int(head[0], source + ": line " + std::to_string(lineno));
  if (n < 2 || n > kMaxOrder)
    fail_parse(source + ": line " + std::to_string(lineno) + ": order " +
               std::to_string(n) + " out of range 2.." +
               std::to_string(kMaxOrder));

  std::vector<Cell> cells;
  // Where each (row, sym) and (col, sym) was first used, for diagnostics.
  std::vector<int> row_use(static_cast<std::size_t>(n + 1) * (n + 1), 0);
  std::vector<int> col_use(static_cast<std::size_t>(n + 1) * (n + 1), 0);

  for (int r = 1; r <= n; ++r) {
    if (!next_line())
      fail_parse(source + ": unexpected end of input at grid row " +
                 std::to_string(r));
    auto toks = tokens_of(line);
    if (static_cast<int>(toks.size()) != n)
      fail_parse(source + ": line " + std::to_string(lineno) + ": expected " +
                 std::to_string(n) + " entries, got " +
                 std::to_string(toks.size()));
    for (int c = 1; c <= n; ++c) {
      const std::string& tok = toks[c - 1];
      if (tok == "." || tok == "0") continue;
      const std::string where = source + ": line " + std::to_string(lineno) +
                                ", entry " + std::to_string(c);
      const int s = parse_int(tok, where);
      if (s < 1 || s > n)
        fail_parse(where + ": symbol " + std::to_string(s) +
                   " out of range 1.." + std::to_string(n));
      if (int prev = row_use[r * (n + 1) + s])
        fail_parse(where + ": symbol " + std::to_string(s) +
                   " already appears in row " + std::to_string(r) +
                   " (column " + std::to_string(prev) + ")");
      if (int prev = col_use[c * (n + 1) + s])
        fail_parse(where + ": symbol " + std::to_string(s) +
                   " already appears in column " + std::to_string(c) +
                   " (row " + std::to_string(prev) + ")");
      row_use[r * (n + 1) + s] = c;
      col_use[c * (n + 1) + s] = r;
      cells.push_back(Cell{r, c, s});
    }
  }
  return Board(n, cells);
}

Board parse_grid_text(const std::string& text, const std::string& source) {
  std::istringstream ss(text);
  return parse_grid(ss, source);
}

std::string to_grid(const Board& p) {
  std::ostringstream out;
  out << p.order() << "\n";
  for (int r = 1; r <= p.order(); ++r) {
    for (int c = 1; c <= p.order(); ++c) {
      if (c > 1) out << " ";
      const int s = p.sym_at(r, c);
      if (s == 0)
        out << ".";
      else
        out << s;
    }
    out << "\n";
  }
  return out.str();
}

Board parse_rooks(std::istream& in, int order, const std::string& source) {
  std::string line;
  int lineno = 0;
  int header_order = 0;
  std::vector<Cell> cells;
  int max_coord = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_comment_or_blank(line)) continue;
    auto toks = tokens_of(line);
    const std::string where = source + ": line " + std::to_string(lineno);
    if (first && (toks.size() == 1 ||
                  (toks.size() == 2 && (toks[0] == "n" || toks[0] == "N")))) {
      header_order = parse_int(toks.back(), where);
      first = false;
      continue;
    }
    first = false;
    if (toks.size() != 3)
      fail_parse(where + ": expected 'row col sym', got " +
                 std::to_string(toks.size()) + " tokens");
    Cell c{parse_int(toks[0], where), parse_int(toks[1], where),
           parse_int(toks[2], where)};
    if (c.row < 1 || c.col < 1 || c.sym < 1)
      fail_parse(where + ": coordinates must be positive");
    max_coord = std::max({max_coord, c.row, c.col, c.sym});
    cells.push_back(c);
  }
  int n = order;
  if (header_order > 0) {
    if (n > 0 && n != header_order)
      fail_parse(source + ": requested order " + std::to_string(n) +
                 " conflicts with the file's order " +
                 std::to_string(header_order));
    n = header_order;
  }
  if (n == 0) n = std::max(max_coord, 2);
  if (n < 2 || n > kMaxOrder)
    fail_parse(source + ": order " + std::to_string(n) + " out of range 2.." +
               std::to_string(kMaxOrder));
  try {
    return Board(n, cells);
  } catch (const Error& e) {
    fail_parse(source + ": " + e.what());
  }
}

Board parse_rooks_text(const std::string& text, int order,
                       const std::string& source) {
  std::istringstream ss(text);
  return parse_rooks(ss, order, source);
}

std::string to_rooks(const Board& p) {
  std::ostringstream out;
  out << "n " << p.order() << "\n";
  for (const Cell& c : p.rooks())
    out << c.row << " " << c.col << " " << c.sym << "\n";
  return out.str();
}

Board parse_board_auto(const std::string& text, int order,
                       const std::string& source) {
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (is_comment_or_blank(line)) continue;
    if (tokens_of(line).size() == 1 &&
        !(line.find('n') != std::string::npos ||
          line.find('N') != std::string::npos))
      return parse_grid_text(text, source);
    return parse_rooks_text(text, order, source);
  }
  fail_parse(source + ": empty input");
}

// ---- JSON ---------------------------------------------------------------

std::vector<int> mask_values(Mask m) {
  std::vector<int> out;
  for (int v : Bits(m)) out.push_back(v);
  return out;
}

json deficit_report_json(const DeficitReport& rep, const Board& p) {
  return json{{"direction", axis_name(rep.dir)},
              {"rows", mask_values(rep.rows)},
              {"cols", mask_values(rep.cols)},
              {"layers_to_t0", mask_values(rep.layers)},
              {"deficit", rep.deficit},
              {"cap", rep.cap},
              {"c0", rep.c0},
              {"c3", rep.c3},
              {"violated", rep.violated()},
              {"board_hash", board_hash(p)}};
}

json identity_audits_json(const std::vector<IdentityAudit>& audits,
                          const Board& p, const Brick& t0) {
  json arr = json::array();
  const std::string hash = board_hash(p);
  for (const IdentityAudit& a : audits)
    arr.push_back(json{{"identity_name", a.name},
                       {"lhs", a.lhs},
                       {"rhs", a.rhs},
                       {"ok", a.ok()},
                       {"board_hash", hash},
                       {"brick",
                        {{"rows", mask_values(t0.rows)},
                         {"cols", mask_values(t0.cols)},
                         {"syms", mask_values(t0.syms)}}}});
  return arr;
}

static json cells_json(const std::vector<Cell>& cells) {
  json arr = json::array();
  for (const Cell& c : cells) arr.push_back(json::array({c.row, c.col, c.sym}));
  return arr;
}

json verify_report_json(const VerifyReport& rep) {
  json by_rooks = json::array();
  for (const RookTally& t : rep.by_rooks)
    by_rooks.push_back(json{{"rooks", t.rooks},
                            {"boards", t.boards},
                            {"completable", t.completable},
                            {"capacity_ok", t.capacity_ok}});
  json disc = json::array();
  for (const Discrepancy& d : rep.discrepancies)
    disc.push_back(json{{"rooks", cells_json(d.rooks)},
                        {"completable", d.completable},
                        {"capacity_ok", d.capacity_ok}});
  return json{{"n", rep.n},
              {"dedup", rep.dedup},
              {"boards_checked", rep.boards},
              {"completable", rep.completable},
              {"violations", rep.violations},
              {"by_rooks", by_rooks},
              {"discrepancies", disc}};
}

json counterexample_report_json(const CounterexampleReport& rep) {
  json found = json::array();
  for (const auto& cells : rep.found) found.push_back(cells_json(cells));
  return json{{"n", rep.n},
              {"classes_scanned", rep.classes_scanned},
              {"found", found}};
}

json classification_json(int n) {
  auto points_json = [](const std::vector<SidePoint>& pts) {
    json arr = json::array();
    for (const SidePoint& p : pts) arr.push_back(json::array({p.a, p.b, p.c}));
    return arr;
  };
  const auto mins = min_capacity_points(n);
  const auto seconds = second_min_capacity_points(n);
  json out{{"n", n},
           {"min_cap", capacity(n, mins[0].a, mins[0].b, mins[0].c)},
           {"min_points", points_json(mins)},
           {"second_min_cap", nullptr},
           {"second_points", points_json(seconds)}};
  if (!seconds.empty())
    out["second_min_cap"] =
        capacity(n, seconds[0].a, seconds[0].b, seconds[0].c);
  return out;
}

json balance_report_json(const BalanceReport& rep) {
  json viols = json::array();
  for (const BalanceViolation& v : rep.violations)
    viols.push_back(json{{"rows", mask_values(v.rows)},
                         {"cols", mask_values(v.cols)},
                         {"dw", v.dw}});
  return json{{"layer", rep.sym},
              {"exhaustive", rep.exhaustive},
              {"ok", rep.ok()},
              {"violations", viols}};
}

// ---- corpus -------------------------------------------------------------

namespace {

std::optional<bool> expect_flag(const json& j, const char* key,
                                const std::string& source) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  if (j[key].is_boolean()) return j[key].get<bool>();
  if (j[key].is_string() && j[key].get<std::string>() == "unknown")
    return std::nullopt;
  fail_parse(source + ": expected." + key + " must be a bool or \"unknown\"");
}

}  // namespace

CorpusEntry corpus_entry_from_json(const json& j, const std::string& source) {
  CorpusEntry e;
  try {
    e.id = j.at("id").get<std::string>();
    e.description = j.value("description", std::string{});
    e.order = j.at("order").get<int>();
    if (j.contains("grid") && !j["grid"].is_null())
      e.grid = j["grid"].get<std::vector<std::string>>();
    const json& exp = j.at("expected");
    e.capacity_ok = expect_flag(exp, "capacity_ok", source);
    e.completable = expect_flag(exp, "completable", source);
    if (exp.contains("deficit") && !exp["deficit"].is_null())
      e.deficit = exp["deficit"].get<int>();
  } catch (const json::exception& ex) {
    fail_parse(source + ": malformed corpus entry: " + ex.what());
  }
  return e;
}

std::vector<CorpusEntry> load_corpus_dir(const std::string& path) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& ent : fs::directory_iterator(path))
    if (ent.path().extension() == ".json") files.push_back(ent.path());
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  for (const fs::path& f : files) {
    std::ifstream in(f);
    if (!in) fail_parse("cannot open corpus file " + f.string());
    json j;
    try {
      in >> j;
    } catch (const json::exception& ex) {
      fail_parse(f.string() + ": invalid JSON: " + ex.what());
    }
    out.push_back(corpus_entry_from_json(j, f.string()));
  }
  return out;
}

}  // namespace plsc
