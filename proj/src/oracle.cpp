#include "traincount/oracle.hpp"

#include <stdexcept>
#include <unordered_map>

#include "traincount/errors.hpp"

namespace traincount {

namespace {

constexpr int kMaxTrailEdges = 57;  // mask plus vertex index must fit one word

struct EdgeHop {
  std::size_t edge;
  std::size_t to;  // dense vertex index
};

// Dense view of the graph for mask arithmetic.
struct DenseGraph {
  LabelIndex idx;
  std::vector<std::vector<EdgeHop>> adjacency;

  explicit DenseGraph(const Multigraph& g) : idx(g.vertices()), adjacency(idx.size()) {
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const BasisElement& edge = g.edges()[e];
      const std::size_t a = idx.index_of(edge.lo);
      const std::size_t b = idx.index_of(edge.hi);
      adjacency[a].push_back({e, b});
      if (a != b) adjacency[b].push_back({e, a});  // a loop stays at its vertex
    }
  }
};

std::uint64_t encode(std::uint64_t mask, std::size_t vertex, std::size_t nv) {
  return mask * nv + vertex;
}

}  // namespace

std::map<Label, BigInt> trail_counts_from(const Multigraph& g, Label start,
                                          std::uint64_t* peak_states) {
  if (!g.has_vertex(start)) {
    throw std::invalid_argument("vertex " + std::to_string(start) + " not in graph");
  }
  const std::size_t m = g.edge_count();
  if (m > kMaxTrailEdges) {
    throw cap_error("trail dp cap exceeded (m=" + std::to_string(m) + ", cap=" +
                    std::to_string(kMaxTrailEdges) + ")");
  }

  std::map<Label, BigInt> result;
  if (m == 0) return result;

  const DenseGraph dg(g);
  const std::size_t nv = dg.idx.size();

  // Walks of equal length reaching the same (used-edge set, vertex) state are
  // interchangeable; one layer per number of edges used.
  std::unordered_map<std::uint64_t, BigInt> layer;
  layer.emplace(encode(0, dg.idx.index_of(start), nv), 1);
  std::uint64_t peak = 1;

  for (std::size_t step = 0; step < m; ++step) {
    std::unordered_map<std::uint64_t, BigInt> next;
    next.reserve(layer.size() * 2);
    for (const auto& [key, count] : layer) {
      const std::uint64_t mask = key / nv;
      const std::size_t v = static_cast<std::size_t>(key % nv);
      for (const EdgeHop& hop : dg.adjacency[v]) {
        if (mask & (std::uint64_t(1) << hop.edge)) continue;
        next[encode(mask | (std::uint64_t(1) << hop.edge), hop.to, nv)] += count;
      }
    }
    peak = std::max<std::uint64_t>(peak, layer.size() + next.size());
    layer = std::move(next);
  }

  const std::uint64_t full = (m == 64) ? ~std::uint64_t(0) : (std::uint64_t(1) << m) - 1;
  for (std::size_t v = 0; v < nv; ++v) {
    auto it = layer.find(encode(full, v, nv));
    if (it != layer.end() && it->second != 0) {
      result.emplace(dg.idx.label_at(v), std::move(it->second));
    }
  }
  if (peak_states) *peak_states = peak;
  return result;
}

BigInt count_trails_dp(const Multigraph& g, Label start, Label end) {
  if (!g.has_vertex(end)) {
    throw std::invalid_argument("vertex " + std::to_string(end) + " not in graph");
  }
  std::map<Label, BigInt> counts = trail_counts_from(g, start);
  auto it = counts.find(end);
  return it == counts.end() ? BigInt(0) : it->second;
}

namespace {

struct PathSearch {
  const DenseGraph& dg;
  std::optional<std::uint64_t> limit;
  std::vector<std::vector<Label>>& out;

  std::uint64_t used = 0;
  std::size_t edges_left;
  std::vector<Label> walk;

  bool full() const { return limit && out.size() >= *limit; }

  void dfs(std::size_t v) {
    if (full()) return;
    if (edges_left == 0) {
      out.push_back(walk);
      return;
    }
    for (const EdgeHop& hop : dg.adjacency[v]) {  // ascending edge index
      if (used & (std::uint64_t(1) << hop.edge)) continue;
      used |= std::uint64_t(1) << hop.edge;
      --edges_left;
      walk.push_back(dg.idx.label_at(hop.to));
      dfs(hop.to);
      walk.pop_back();
      ++edges_left;
      used &= ~(std::uint64_t(1) << hop.edge);
      if (full()) return;
    }
  }
};

}  // namespace

std::vector<std::vector<Label>> enumerate_eulerian_paths(const Multigraph& g,
                                                         std::optional<Label> start,
                                                         std::optional<std::uint64_t> limit,
                                                         int cap) {
  const std::size_t m = g.edge_count();
  if (cap >= 0 && m > static_cast<std::size_t>(cap)) {
    throw cap_error("enumeration cap exceeded (m=" + std::to_string(m) +
                    ", cap=" + std::to_string(cap) + ")");
  }
  if (start && !g.has_vertex(*start)) {
    throw std::invalid_argument("vertex " + std::to_string(*start) + " not in graph");
  }

  std::vector<std::vector<Label>> out;
  if (m == 0) return out;

  const DenseGraph dg(g);
  // Hops were appended in edge order, so each adjacency list is already
  // sorted by edge index.
  for (const Label s : g.vertices()) {
    if (start && s != *start) continue;
    if (g.degree(s) == 0) continue;
    PathSearch search{dg, limit, out, 0, m, {s}};
    search.dfs(dg.idx.index_of(s));
    if (limit && out.size() >= *limit) break;
  }
  return out;
}

namespace {

std::string table_entry_to_string(const CountTable& t, BasisElement e) {
  auto it = t.find(e);
  return it == t.end() ? "absent" : it->second.get_str();
}

// First key on which two tables differ, if any.
std::optional<BasisElement> first_table_diff(const CountTable& a, const CountTable& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first != ib->first) return std::min(ia->first, ib->first);
    if (ia->second != ib->second) return ia->first;
    ++ia;
    ++ib;
  }
  if (ia != a.end()) return ia->first;
  if (ib != b.end()) return ib->first;
  return std::nullopt;
}

}  // namespace

void judge_agreement(VerifyReport& report) {
  report.agree = true;
  report.first_mismatch.clear();

  const auto compare = [&](const char* name_a, const CountTable& a, const char* name_b,
                           const CountTable& b) {
    if (!report.agree) return;
    if (auto diff = first_table_diff(a, b)) {
      report.agree = false;
      report.first_mismatch = "entry " + to_string(*diff) + ": " + name_a + "=" +
                              table_entry_to_string(a, *diff) + ", " + name_b + "=" +
                              table_entry_to_string(b, *diff);
    }
  };

  compare("dp", report.dp_table, "oracle", report.oracle_table);
  if (report.naive_ran) compare("naive", report.naive_table, "dp", report.dp_table);
}

namespace {

// Empty when every coefficient is a nonnegative multiple of 2^(m-1).
std::optional<std::string> divisibility_failure(const SymMatrix& raw, std::size_t m) {
  const BigInt divisor = pow2(static_cast<unsigned long>(m) - 1);
  for (const auto& [e, coeff] : raw.entries()) {
    if (coeff < 0 || !mpz_divisible_p(coeff.get_mpz_t(), divisor.get_mpz_t())) {
      return "raw coefficient of " + to_string(e) + " is " + coeff.get_str() +
             ", not a nonnegative multiple of 2^" + std::to_string(m - 1);
    }
  }
  return std::nullopt;
}

}  // namespace

VerifyReport verify_engines(const Multigraph& g, const VerifyOptions& opts) {
  VerifyReport report;
  report.m = g.edge_count();

  const PieceList pieces = dominoes_from_graph(g);
  const std::vector<BasisElement> faces = pieces.faces();

  report.divisibility_ok = true;
  std::string divisibility_detail;

  const SymMatrix raw_dp = symmetrize_dp(faces, DpOptions{opts.dp_cap, opts.threads});
  if (auto fail = divisibility_failure(raw_dp, report.m)) {
    report.divisibility_ok = false;
    divisibility_detail = "dp: " + *fail;
  } else {
    report.dp_table = counts_from_raw(raw_dp, report.m);
  }

  if (report.m <= static_cast<std::size_t>(opts.naive_cap)) {
    report.naive_ran = true;
    const SymMatrix raw_naive = symmetrize_naive(faces, opts.naive_cap);
    if (auto fail = divisibility_failure(raw_naive, report.m)) {
      report.divisibility_ok = false;
      if (!divisibility_detail.empty()) divisibility_detail += "; ";
      divisibility_detail += "naive: " + *fail;
    } else {
      report.naive_table = counts_from_raw(raw_naive, report.m);
    }
  }

  report.oracle_table = eul_counts(g, CountOptions{Engine::oracle}).table;

  judge_agreement(report);
  if (!report.divisibility_ok) {
    report.agree = false;
    if (report.first_mismatch.empty()) report.first_mismatch = divisibility_detail;
  }
  return report;
}

}  // namespace traincount
