#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "traincount/graphcore.hpp"

namespace traincount {

// State of the trail DP: which edges have been used and where the walk
// currently stands. O(2^m * n) of these exist versus m! raw walks.
struct TrailDPKey {
  std::uint64_t used_edges = 0;
  Label current = 0;
};

// Number of directed edge sequences using every edge exactly once from
// start to end. Loops consume their edge and stay put. Requires both labels
// to be vertices of g and m to fit in the bitmask word.
BigInt count_trails_dp(const Multigraph& g, Label start, Label end);

// One forward sweep from start, returning the count for every possible end
// vertex at once (same DP, shared across ends). Vertices absent from the map
// have count zero.
std::map<Label, BigInt> trail_counts_from(const Multigraph& g, Label start,
                                          std::uint64_t* peak_states = nullptr);

// Every eulerian path as its vertex sequence v0..vm, by exhaustive
// backtracking. Deterministic: starts ascend, and within a start the paths
// come in lexicographic order of the edge index chosen at each step.
std::vector<std::vector<Label>> enumerate_eulerian_paths(
    const Multigraph& g, std::optional<Label> start = std::nullopt,
    std::optional<std::uint64_t> limit = std::nullopt, int cap = kDefaultEnumCap);

struct VerifyOptions {
  int naive_cap = kDefaultNaiveCap;
  int dp_cap = kDefaultDpCap;
  int threads = 1;
};

struct VerifyReport {
  std::size_t m = 0;
  bool naive_ran = false;  // skipped when m exceeds the naive cap
  CountTable naive_table;
  CountTable dp_table;
  CountTable oracle_table;
  bool divisibility_ok = false;  // raw S_m coefficients divisible by 2^(m-1), quotients >= 0
  bool agree = false;
  std::string first_mismatch;  // empty when agree
};

// Populates agree/first_mismatch from the tables already in the report.
// Split out so a caller can tamper with a table and re-judge (fault
// injection in tests and the CLI).
void judge_agreement(VerifyReport& report);

// Runs every applicable engine on g and compares the tables entry by entry.
// Disagreement is report content, not an exception.
VerifyReport verify_engines(const Multigraph& g, const VerifyOptions& opts = {});

}  // namespace traincount
