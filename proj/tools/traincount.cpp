// traincount — exact train / eulerian-path counting front end.
//
// Subcommands:
//   count      print the start/end count table for a piece or edge list
//   enumerate  list every train as its vertex sequence
//   verify     cross-check all applicable engines against each other
//   bench      time the engines over generated graph families (CSV)
//
// Exit codes: 0 success, 1 usage error, 2 parse/cap error, 3 verification
// mismatch (or a violated internal counting invariant).

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "traincount/domino.hpp"
#include "traincount/errors.hpp"
#include "traincount/graphcore.hpp"
#include "traincount/io.hpp"
#include "traincount/oracle.hpp"
#include "traincount/symalg.hpp"

namespace {

using namespace traincount;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitMismatch = 3;

std::string read_source(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Engine engine_from_name(const std::string& name) {
  if (name == "naive") return Engine::naive;
  if (name == "dp") return Engine::dp;
  if (name == "oracle") return Engine::oracle;
  throw CLI::ValidationError("--engine", "unknown engine \"" + name + "\"");
}

LabelMap labels_from_specs(const std::vector<std::string>& specs) {
  LabelMap map;
  for (const std::string& spec : specs) {
    const std::size_t eq = spec.find('=');
    unsigned long from = 0;
    unsigned long to = 0;
    try {
      std::size_t used = 0;
      if (eq == std::string::npos) throw std::invalid_argument("no '='");
      from = std::stoul(spec.substr(0, eq), &used);
      if (used != eq) throw std::invalid_argument("junk before '='");
      to = std::stoul(spec.substr(eq + 1), &used);
      if (used != spec.size() - eq - 1) throw std::invalid_argument("junk after '='");
    } catch (const std::exception&) {
      throw CLI::ValidationError("--labels", "expected OLD=NEW, got \"" + spec + "\"");
    }
    map[static_cast<Label>(from)] = static_cast<Label>(to);
  }
  return map;
}

// Shared per-subcommand option state.
struct CommonOpts {
  std::string input = "-";
  std::string as = "dominoes";
  int threads = 1;
  int naive_cap = kDefaultNaiveCap;
  int dp_cap = kDefaultDpCap;
  std::vector<std::string> label_specs;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_engine_caps = true) {
  cmd->add_option("input", opts.input, "input file, or - for standard input")
      ->default_str("-");
  cmd->add_option("--as", opts.as, "interpret pairs as dominoes or edges")
      ->check(CLI::IsMember({"dominoes", "edges"}))
      ->default_str("dominoes");
  cmd->add_option("--labels", opts.label_specs, "remap output labels (OLD=NEW, repeatable)");
  if (with_engine_caps) {
    cmd->add_option("--threads", opts.threads, "worker threads for the dp engine")
        ->check(CLI::PositiveNumber)
        ->default_str("1");
    cmd->add_option("--naive-cap", opts.naive_cap, "max m for the naive engine")
        ->default_str(std::to_string(kDefaultNaiveCap));
    cmd->add_option("--dp-cap", opts.dp_cap, "max m for the dp engine")
        ->default_str(std::to_string(kDefaultDpCap));
  }
}

InputDocument load(const CommonOpts& opts) {
  const auto kind =
      opts.as == "edges" ? InputDocument::Kind::edges : InputDocument::Kind::dominoes;
  return parse_input(read_source(opts.input), kind, opts.input);
}

int run_count(const CommonOpts& opts, const std::string& engine_name,
              const std::string& format) {
  const InputDocument doc = load(opts);
  const LabelMap labels = labels_from_specs(opts.label_specs);
  const CountOptions copts{.engine = engine_from_name(engine_name),
                           .naive_cap = opts.naive_cap,
                           .dp_cap = opts.dp_cap,
                           .threads = opts.threads};
  const EulCountResult result = eul_counts(Multigraph::from_edges(doc.items), copts);
  std::cout << (format == "json" ? render_counts_json(result, labels)
                                 : render_counts_text(result, labels));
  return kExitOk;
}

int run_enumerate(const CommonOpts& opts, std::optional<std::uint32_t> start,
                  std::optional<std::uint32_t> end, std::optional<std::uint64_t> limit,
                  int enum_cap) {
  const InputDocument doc = load(opts);
  const LabelMap labels = labels_from_specs(opts.label_specs);
  const PieceList pieces(doc.items);
  const std::vector<TrainSequence> trains =
      enumerate_trains(pieces, start, end, limit, enum_cap);
  for (const TrainSequence& train : trains) {
    const std::vector<Label> seq = train.vertex_sequence(pieces);
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (i) std::cout << ' ';
      std::cout << remap(seq[i], labels);
    }
    std::cout << '\n';
  }
  return kExitOk;
}

int run_verify(const CommonOpts& opts, bool inject_fault) {
  const InputDocument doc = load(opts);
  const VerifyOptions vopts{.naive_cap = opts.naive_cap,
                            .dp_cap = opts.dp_cap,
                            .threads = opts.threads};
  VerifyReport report = verify_engines(Multigraph::from_edges(doc.items), vopts);
  if (inject_fault) {
    // Deliberately corrupt one table entry, then re-judge: exercises the
    // mismatch-reporting path end to end.
    if (report.dp_table.empty()) {
      report.dp_table[BasisElement(0, 0)] = 1;
    } else {
      report.dp_table.begin()->second += 1;
    }
    report.first_mismatch.clear();
    judge_agreement(report);
  }
  std::cout << render_verify_report(report);
  return report.agree ? kExitOk : kExitMismatch;
}

// --- bench ------------------------------------------------------------

std::vector<BasisElement> make_family(const std::string& family, unsigned n, unsigned edges,
                                      std::uint64_t seed) {
  std::vector<BasisElement> out;
  if (family == "path") {
    for (unsigned i = 1; i < n; ++i) out.emplace_back(i, i + 1);
  } else if (family == "cycle") {
    for (unsigned i = 1; i < n; ++i) out.emplace_back(i, i + 1);
    out.emplace_back(n, 1);
  } else if (family == "complete") {
    for (unsigned i = 1; i <= n; ++i)
      for (unsigned j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  } else if (family == "random") {
    // Raw modulo keeps the stream identical across standard libraries.
    std::mt19937 rng(static_cast<std::uint32_t>(seed));
    for (unsigned i = 0; i < edges; ++i) {
      const Label u = 1 + rng() % n;
      const Label v = 1 + rng() % n;
      out.emplace_back(u, v);
    }
  } else {
    throw CLI::ValidationError("--family", "unknown family \"" + family + "\"");
  }
  return out;
}

struct BenchRow {
  std::string engine;
  double wall_ms = 0;
  std::uint64_t peak_states = 0;
  BigInt total;
};

BigInt table_total(const CountTable& table) {
  BigInt total = 0;
  for (const auto& [e, c] : table) total += c;
  return total;
}

BenchRow bench_engine(const Multigraph& g, Engine engine, const CommonOpts& opts) {
  BenchRow row;
  row.engine = to_string(engine);
  const auto t0 = std::chrono::steady_clock::now();
  if (engine == Engine::oracle) {
    std::uint64_t peak = 0;
    CountTable table;
    for (const Label s : g.vertices()) {
      if (g.degree(s) == 0) continue;
      std::uint64_t local = 0;
      for (const auto& [e, c] : trail_counts_from(g, s, &local)) {
        if (e >= s && c != 0) table[BasisElement(s, e)] = c;
      }
      peak = std::max(peak, local);
    }
    row.peak_states = peak;
    row.total = table_total(table);
  } else if (engine == Engine::dp) {
    DpStats stats;
    const std::vector<BasisElement> faces = dominoes_from_graph(g).faces();
    const SymMatrix raw = symmetrize_dp(faces, {.cap = opts.dp_cap, .threads = opts.threads},
                                        &stats);
    row.peak_states = stats.peak_live_matrices;
    row.total = table_total(counts_from_raw(raw, faces.size()));
  } else {
    const std::vector<BasisElement> faces = dominoes_from_graph(g).faces();
    const SymMatrix raw = symmetrize_naive(faces, opts.naive_cap);
    row.total = table_total(counts_from_raw(raw, faces.size()));
  }
  const auto t1 = std::chrono::steady_clock::now();
  row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return row;
}

int run_bench(const CommonOpts& opts, const std::string& family, unsigned n, unsigned edges,
              std::uint64_t seed, const std::vector<std::string>& engine_names) {
  std::vector<BasisElement> items;
  std::string family_col = family;
  if (family.empty()) {
    items = load(opts).items;
    family_col = "input";
  } else {
    items = make_family(family, n, edges, seed);
  }
  const Multigraph g = Multigraph::from_edges(items);
  if (family.empty()) n = static_cast<unsigned>(g.vertices().size());

  std::cout << "family,n,m,engine,wall_ms,peak_states,total\n";
  for (const std::string& name : engine_names) {
    const BenchRow row = bench_engine(g, engine_from_name(name), opts);
    std::ostringstream ms;
    ms.setf(std::ios::fixed);
    ms.precision(3);
    ms << row.wall_ms;
    std::cout << family_col << ',' << n << ',' << g.edge_count() << ',' << row.engine << ','
              << ms.str() << ',' << row.peak_states << ',' << row.total.get_str() << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact domino-train and eulerian-path counter"};
  app.require_subcommand(1);

  CommonOpts count_opts;
  std::string count_engine = "dp";
  std::string count_format = "text";
  CLI::App* count = app.add_subcommand("count", "print the start/end count table");
  add_common(count, count_opts);
  count->add_option("--engine", count_engine, "naive, dp, or oracle")
      ->check(CLI::IsMember({"naive", "dp", "oracle"}))
      ->default_str("dp");
  count->add_option("--format", count_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_str("text");

  CommonOpts enum_opts;
  std::optional<std::uint32_t> enum_start;
  std::optional<std::uint32_t> enum_end;
  std::optional<std::uint64_t> enum_limit;
  int enum_cap = kDefaultEnumCap;
  CLI::App* enumerate = app.add_subcommand("enumerate", "list trains as vertex sequences");
  add_common(enumerate, enum_opts, /*with_engine_caps=*/false);
  enumerate->add_option("--start", enum_start, "keep trains starting at this label");
  enumerate->add_option("--end", enum_end, "keep trains ending at this label");
  enumerate->add_option("--limit", enum_limit, "stop after this many trains");
  enumerate->add_option("--enum-cap", enum_cap, "max m for enumeration")
      ->default_str(std::to_string(kDefaultEnumCap));

  CommonOpts verify_opts;
  bool inject_fault = false;
  CLI::App* verify = app.add_subcommand("verify", "cross-check engines against each other");
  add_common(verify, verify_opts);
  verify->add_flag("--inject-fault", inject_fault)->group("");

  CommonOpts bench_opts;
  std::string bench_family;
  unsigned bench_n = 5;
  unsigned bench_edges = 8;
  std::uint64_t bench_seed = 1;
  std::vector<std::string> bench_engines = {"dp", "oracle"};
  CLI::App* bench = app.add_subcommand("bench", "time engines over graph families (CSV)");
  add_common(bench, bench_opts);
  bench->add_option("--family", bench_family, "path, cycle, complete, or random")
      ->check(CLI::IsMember({"path", "cycle", "complete", "random"}));
  bench->add_option("--n", bench_n, "vertex count for generated families")
      ->check(CLI::PositiveNumber)
      ->default_str("5");
  bench->add_option("--edges", bench_edges, "edge count for the random family")
      ->check(CLI::PositiveNumber)
      ->default_str("8");
  bench->add_option("--seed", bench_seed, "seed for the random family")->default_str("1");
  bench->add_option("--engine", bench_engines, "engines to run (repeatable)")
      ->check(CLI::IsMember({"naive", "dp", "oracle"}))
      ->default_str("dp oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (count->parsed()) return run_count(count_opts, count_engine, count_format);
    if (enumerate->parsed())
      return run_enumerate(enum_opts, enum_start, enum_end, enum_limit, enum_cap);
    if (verify->parsed()) return run_verify(verify_opts, inject_fault);
    return run_bench(bench_opts, bench_family, bench_n, bench_edges, bench_seed,
                     bench_engines);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const invariant_error& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const cap_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
