#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "traincount/graphcore.hpp"
#include "traincount/io.hpp"

using namespace traincount;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Runs the installed binary with a shell-quoted argument string, feeding
// stdin_text on standard input and capturing both output streams.
RunResult run_cli(const std::string& args, const std::string& stdin_text = "") {
  static int counter = 0;
  const std::string base = "/tmp/traincount_cli_test_" + std::to_string(++counter);
  const std::string in_path = base + ".in";
  const std::string out_path = base + ".out";
  const std::string err_path = base + ".err";
  {
    std::ofstream in(in_path, std::ios::binary);
    in << stdin_text;
  }
  const std::string cmd = std::string(TRAINCOUNT_CLI_PATH) + " " + args + " < " + in_path +
                          " > " + out_path + " 2> " + err_path;
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(in_path.c_str());
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

const std::string kQuadFixture = std::string(FIXTURES_DIR) + "/quad_doubled.txt";
const std::string kEightFixture = std::string(FIXTURES_DIR) + "/k5_minus_two.txt";
const std::string kFull3Fixture = std::string(FIXTURES_DIR) + "/pips3_full.txt";

// Blanks the wall_ms column of a bench CSV so timing jitter cannot affect
// equality comparisons.
std::string mask_wall_ms(const std::string& csv) {
  std::istringstream in(csv);
  std::ostringstream out;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (header) {
      out << line << "\n";
      header = false;
      continue;
    }
    std::vector<std::string> cols;
    std::istringstream ls(line);
    std::string col;
    while (std::getline(ls, col, ',')) cols.push_back(col);
    if (cols.size() == 7) cols[4] = "-";
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << "\n";
  }
  return out.str();
}

}  // namespace

TEST_CASE("count: text output for the quad fixture") {
  const RunResult r = run_cli("count " + kQuadFixture);
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "m 6\n"
        "engine dp\n"
        "start end count\n"
        "1 1 12\n"
        "2 2 24\n"
        "3 3 24\n"
        "4 4 12\n"
        "total 72\n");
}

TEST_CASE("count: single piece json, exact bytes") {
  const RunResult r = run_cli("count - --format json", "1 2\n");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{\n"
        "  \"m\": 1,\n"
        "  \"engine\": \"dp\",\n"
        "  \"counts\": [\n"
        "    {\n"
        "      \"start\": 1,\n"
        "      \"end\": 2,\n"
        "      \"count\": \"1\"\n"
        "    }\n"
        "  ]\n"
        "}\n");
}

TEST_CASE("count: json round-trips into the in-memory table") {
  const RunResult r = run_cli("count " + kEightFixture + " --as edges --format json");
  REQUIRE(r.exit_code == 0);
  const CountTable parsed = table_from_json(r.out);
  const InputDocument doc =
      parse_input(slurp(kEightFixture), InputDocument::Kind::edges, "fixture");
  const CountTable computed = eul_counts(Multigraph::from_edges(doc.items)).table;
  CHECK(parsed == computed);
  REQUIRE(parsed.size() == 1);
  CHECK(parsed.at({4, 5}) == 44);
}

TEST_CASE("count: every engine flag reaches its engine") {
  for (const std::string engine : {"naive", "dp", "oracle"}) {
    const RunResult r = run_cli("count " + kQuadFixture + " --engine " + engine);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("engine " + engine + "\n") != std::string::npos);
    CHECK(r.out.find("total 72\n") != std::string::npos);
  }
}

TEST_CASE("count: byte determinism, including across thread counts") {
  const std::string args = "count " + kEightFixture + " --as edges --format json";
  const RunResult a = run_cli(args);
  const RunResult b = run_cli(args);
  const RunResult c = run_cli(args + " --threads 3");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
}

TEST_CASE("count: label remapping is output-only") {
  const RunResult r = run_cli("count " + kEightFixture + " --as edges --labels 4=40 --labels 5=9");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("40 9 44\n") != std::string::npos);
}

TEST_CASE("enumerate: goldens and filters") {
  CHECK(run_cli("enumerate - --start 1", "1 2\n2 3\n").out == "1 2 3\n");

  const std::string k3 = "1 2\n1 3\n2 3\n";
  const RunResult full = run_cli("enumerate - --start 1", k3);
  CHECK(full.exit_code == 0);
  CHECK(full.out == "1 2 3 1\n1 3 2 1\n");

  const RunResult limited = run_cli("enumerate - --start 1 --limit 1", k3);
  CHECK(limited.out == "1 2 3 1\n");

  const RunResult ended = run_cli("enumerate - --start 1 --end 3", "1 2\n2 3\n");
  CHECK(ended.out == "1 2 3\n");
  CHECK(ended.exit_code == 0);

  const RunResult no_match = run_cli("enumerate - --start 1 --end 2", "1 2\n2 3\n");
  CHECK(no_match.out.empty());
  CHECK(no_match.exit_code == 0);

  const RunResult infeasible = run_cli("enumerate -", "1 2\n3 4\n");
  CHECK(infeasible.exit_code == 0);
  CHECK(infeasible.out.empty());
}

TEST_CASE("verify: agreement and deliberate fault") {
  const RunResult ok = run_cli("verify " + kFull3Fixture);
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("engines naive dp oracle\n") != std::string::npos);
  CHECK(ok.out.find("divisibility ok\n") != std::string::npos);
  CHECK(ok.out.find("agreement ok\n") != std::string::npos);

  const RunResult bad = run_cli("verify " + kFull3Fixture + " --inject-fault");
  CHECK(bad.exit_code == 3);
  CHECK(bad.out.find("agreement MISMATCH\n") != std::string::npos);
  CHECK(bad.out.find("diff entry") != std::string::npos);

  const RunResult skipped = run_cli("verify " + kFull3Fixture + " --naive-cap 3");
  CHECK(skipped.exit_code == 0);
  CHECK(skipped.out.find("engines dp oracle\n") != std::string::npos);
  CHECK(skipped.out.find("naive skipped") != std::string::npos);
}

TEST_CASE("exit codes follow the contract") {
  CHECK(run_cli("count -", "1 x\n").exit_code == 2);
  CHECK(run_cli("count -", "1 x\n").err.find("line 1") != std::string::npos);
  CHECK(run_cli("count -", "# only comments\n").exit_code == 2);
  CHECK(run_cli("count /nonexistent/file.txt").exit_code == 2);

  std::string ten;
  for (int i = 0; i < 10; ++i) ten += "1 2\n";
  CHECK(run_cli("count - --engine naive", ten).exit_code == 2);  // over the naive cap

  std::string eleven;
  for (int i = 0; i < 11; ++i) eleven += "1 1\n";
  CHECK(run_cli("enumerate -", eleven).exit_code == 2);  // over the enumeration cap

  CHECK(run_cli("count --engine warp " + kQuadFixture).exit_code == 1);
  CHECK(run_cli("frobnicate").exit_code == 1);
  CHECK(run_cli("").exit_code == 1);
  CHECK(run_cli("count " + kQuadFixture + " --labels notapair").exit_code == 1);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("bench: fixed seed reproduces everything but the clock") {
  const std::string args = "bench --family random --n 4 --edges 6 --seed 11";
  const RunResult a = run_cli(args);
  const RunResult b = run_cli(args);
  REQUIRE(a.exit_code == 0);
  CHECK(mask_wall_ms(a.out) == mask_wall_ms(b.out));
  CHECK(a.out.rfind("family,n,m,engine,wall_ms,peak_states,total\n", 0) == 0);
}

TEST_CASE("bench: engines report identical totals") {
  const auto totals_of = [](const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);  // header
    std::vector<std::string> totals;
    while (std::getline(in, line)) totals.push_back(line.substr(line.rfind(',') + 1));
    return totals;
  };

  // All three engines fit a 5-cycle.
  const RunResult cyc =
      run_cli("bench --family cycle --n 5 --engine naive --engine dp --engine oracle");
  REQUIRE(cyc.exit_code == 0);
  const auto cyc_totals = totals_of(cyc.out);
  REQUIRE(cyc_totals.size() == 3);
  CHECK(cyc_totals[0] == cyc_totals[1]);
  CHECK(cyc_totals[1] == cyc_totals[2]);
  CHECK(cyc_totals[0] == "10");  // two directions from each of five roots

  // The 5-clique exceeds the naive cap; dp and oracle agree on it.
  const RunResult k5 = run_cli("bench --family complete --n 5 --engine dp --engine oracle");
  REQUIRE(k5.exit_code == 0);
  const auto k5_totals = totals_of(k5.out);
  REQUIRE(k5_totals.size() == 2);
  CHECK(k5_totals[0] == k5_totals[1]);
  CHECK(k5_totals[0] == "2640");  // rooted directed circuit count of the 5-clique
}

TEST_CASE("bench: unique path endpoints") {
  const RunResult r = run_cli("bench --family path --n 20 --engine oracle");
  REQUIRE(r.exit_code == 0);
  // A path graph has exactly one eulerian path per direction: total 1 under
  // the one-direction table convention.
  CHECK(r.out.find(",oracle,") != std::string::npos);
  const std::string tail = r.out.substr(r.out.rfind(',') + 1);
  CHECK(tail == "1\n");
}
