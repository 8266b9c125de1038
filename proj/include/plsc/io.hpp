#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "plsc/board.hpp"
#include "plsc/capacity.hpp"
#include "plsc/extremal.hpp"
#include "plsc/solver.hpp"

namespace plsc {

using json = nlohmann::json;

// Grid text: first line the order, then n lines of n tokens; "." or "0"
// marks an empty cell, otherwise a symbol 1..n.  Serialization always
// writes ".".
Board parse_grid(std::istream&, const std::string& source = "input");
Board parse_grid_text(const std::string&, const std::string& source = "input");
std::string to_grid(const Board&);

// Rook list: one "row col sym" triple per line; '#' comments and blank
// lines are skipped.  An optional leading "n <order>" line pins the order,
// otherwise the largest coordinate (or the order argument, when given)
// decides.
Board parse_rooks(std::istream&, int order = 0,
                  const std::string& source = "input");
Board parse_rooks_text(const std::string&, int order = 0,
                       const std::string& source = "input");
std::string to_rooks(const Board&);

// Grid when the first meaningful line is a lone integer, rook list
// otherwise.
Board parse_board_auto(const std::string& text, int order = 0,
                       const std::string& source = "input");

// ---- JSON reports -------------------------------------------------------

std::vector<int> mask_values(Mask);

json deficit_report_json(const DeficitReport&, const Board&);
json identity_audits_json(const std::vector<IdentityAudit>&, const Board&,
                          const Brick& t0);
json verify_report_json(const VerifyReport&);
json counterexample_report_json(const CounterexampleReport&);
json classification_json(int n);
json balance_report_json(const BalanceReport&);

// ---- corpus -------------------------------------------------------------

struct CorpusEntry {
  std::string id;
  std::string description;
  int order = 0;
  std::optional<std::vector<std::string>> grid;  // null for placeholders
  std::optional<bool> capacity_ok;               // expectations; null unknown
  std::optional<bool> completable;
  std::optional<int> deficit;
};

CorpusEntry corpus_entry_from_json(const json&, const std::string& source);
std::vector<CorpusEntry> load_corpus_dir(const std::string& path);

}  // namespace plsc
