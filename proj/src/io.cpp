#include "traincount/io.hpp"

#include <charconv>
#include <limits>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "traincount/errors.hpp"

namespace traincount {

namespace {

std::string_view strip_comment(std::string_view line) {
  const std::size_t hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// One whitespace-separated token of nonnegative digits -> Label.
std::optional<Label> parse_label_token(std::string_view tok) {
  if (tok.empty()) return std::nullopt;
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
  if (value > std::numeric_limits<Label>::max()) return std::nullopt;
  return static_cast<Label>(value);
}

}  // namespace

InputDocument parse_input(std::string_view text, InputDocument::Kind kind, std::string source) {
  InputDocument doc;
  doc.kind = kind;
  doc.source = std::move(source);

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view raw =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    const std::string_view line = trim(strip_comment(raw));
    if (line.empty()) continue;

    // Expect exactly two tokens.
    const std::size_t split = line.find_first_of(" \t");
    if (split == std::string_view::npos) {
      throw parse_error(line_no, "expected two numbers, got \"" + std::string(line) + "\"");
    }
    const std::optional<Label> a = parse_label_token(trim(line.substr(0, split)));
    const std::optional<Label> b = parse_label_token(trim(line.substr(split)));
    if (!a || !b) {
      throw parse_error(line_no, "expected two nonnegative integers, got \"" + std::string(line) +
                                     "\"");
    }
    doc.items.emplace_back(*a, *b);
  }

  if (doc.items.empty()) throw parse_error("empty input");
  return doc;
}

Label remap(Label v, const LabelMap& map) {
  const auto it = map.find(v);
  return it == map.end() ? v : it->second;
}

std::string render_counts_text(const EulCountResult& result, const LabelMap& labels) {
  std::ostringstream out;
  out << "m " << result.m << "\n";
  out << "engine " << to_string(result.engine) << "\n";
  out << "start end count\n";
  BigInt total = 0;
  for (const auto& [e, count] : result.table) {
    out << remap(e.lo, labels) << " " << remap(e.hi, labels) << " " << count.get_str() << "\n";
    total += count;
  }
  out << "total " << total.get_str() << "\n";
  return out.str();
}

std::string render_counts_json(const EulCountResult& result, const LabelMap& labels) {
  nlohmann::ordered_json doc;
  doc["m"] = result.m;
  doc["engine"] = to_string(result.engine);
  auto& counts = doc["counts"] = nlohmann::ordered_json::array();
  for (const auto& [e, count] : result.table) {
    counts.push_back({{"start", remap(e.lo, labels)},
                      {"end", remap(e.hi, labels)},
                      {"count", count.get_str()}});
  }
  return doc.dump(2) + "\n";
}

CountTable table_from_json(std::string_view json_text) {
  const nlohmann::json doc = nlohmann::json::parse(json_text);
  CountTable table;
  for (const auto& row : doc.at("counts")) {
    const Label start = row.at("start").get<Label>();
    const Label end = row.at("end").get<Label>();
    table.emplace(BasisElement(start, end), BigInt(row.at("count").get<std::string>()));
  }
  return table;
}

std::string render_verify_report(const VerifyReport& report) {
  std::ostringstream out;
  out << "m " << report.m << "\n";
  out << "engines " << (report.naive_ran ? "naive dp oracle" : "dp oracle") << "\n";
  if (!report.naive_ran) out << "naive skipped (m over naive cap)\n";
  out << "divisibility " << (report.divisibility_ok ? "ok" : "VIOLATED") << "\n";
  out << "agreement " << (report.agree ? "ok" : "MISMATCH") << "\n";
  if (!report.agree) {
    out << "diff " << report.first_mismatch << "\n";
    return out.str();
  }
  out << "start end count\n";
  for (const auto& [e, count] : report.dp_table) {
    out << e.lo << " " << e.hi << " " << count.get_str() << "\n";
  }
  return out.str();
}

}  // namespace traincount
