#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "traincount/oracle.hpp"

namespace traincount {

// A parsed input file: one "i j" pair per line, blank lines and #-comments
// ignored. The two kinds are syntactically identical; the flag decides how
// the pairs are interpreted downstream.
struct InputDocument {
  enum class Kind { dominoes, edges };

  Kind kind = Kind::dominoes;
  std::vector<BasisElement> items;  // in file order
  std::string source;               // path or "<stdin>"
};

// Throws parse_error with a 1-based line number on malformed lines, and
// parse_error("empty input") when no pairs survive.
InputDocument parse_input(std::string_view text, InputDocument::Kind kind, std::string source);

// Optional output-label remapping (old -> new). Internal label handling is
// never visible externally; this is purely cosmetic on the way out.
using LabelMap = std::map<Label, Label>;

Label remap(Label v, const LabelMap& map);

// Stable text rendering: header lines, one "start end count" row per entry
// sorted by (start, end), and a total.
std::string render_counts_text(const EulCountResult& result, const LabelMap& labels = {});

// {"m": int, "engine": str, "counts": [{"start": int, "end": int,
// "count": decimal-string}]} sorted by (start, end). Counts are strings
// because they overflow doubles long before the engine caps bite.
std::string render_counts_json(const EulCountResult& result, const LabelMap& labels = {});

// Parses render_counts_json output back into a table (round-trip check).
CountTable table_from_json(std::string_view json_text);

std::string render_verify_report(const VerifyReport& report);

}  // namespace traincount
