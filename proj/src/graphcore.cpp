#include "traincount/graphcore.hpp"

#include <algorithm>
#include <stdexcept>

#include "traincount/errors.hpp"
#include "traincount/oracle.hpp"

namespace traincount {

Multigraph Multigraph::from_edges(std::span<const BasisElement> edges) {
  Multigraph g;
  for (const BasisElement& e : edges) g.add_edge(e);
  return g;
}

void Multigraph::add_vertex(Label v) {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) vertices_.insert(it, v);
}

void Multigraph::add_edge(BasisElement e) {
  add_vertex(e.lo);
  add_vertex(e.hi);
  edges_.push_back(e);
}

bool Multigraph::has_vertex(Label v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::size_t Multigraph::degree(Label v) const {
  std::size_t d = 0;
  for (const BasisElement& e : edges_) {
    if (e.lo == v) ++d;
    if (e.hi == v) ++d;  // a loop hits both branches
  }
  return d;
}

Multigraph graph_from_dominoes(const PieceList& pieces) {
  Multigraph g;
  for (const Piece& p : pieces.pieces()) g.add_edge(p.face);
  return g;
}

PieceList dominoes_from_graph(const Multigraph& g) {
  return PieceList(g.edges());
}

SymMatrix adjacency_matrix(const Multigraph& g) {
  SymMatrix a;
  for (const BasisElement& e : g.edges()) a.add(e, 1);
  return a;
}

namespace {

// Connectivity of the subgraph spanned by non-isolated vertices.
bool edge_support_connected(const Multigraph& g) {
  if (g.edge_count() == 0) return false;
  const LabelIndex idx(g.vertices());
  std::vector<std::vector<std::size_t>> adj(idx.size());
  for (const BasisElement& e : g.edges()) {
    const std::size_t a = idx.index_of(e.lo);
    const std::size_t b = idx.index_of(e.hi);
    adj[a].push_back(b);
    if (a != b) adj[b].push_back(a);
  }
  std::vector<bool> seen(idx.size(), false);
  std::vector<std::size_t> stack{idx.index_of(g.edges()[0].lo)};
  seen[stack[0]] = true;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (const std::size_t w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (!seen[i] && !adj[i].empty()) return false;
  }
  return true;
}

}  // namespace

Feasibility eulerian_feasibility(const Multigraph& g) {
  if (g.edge_count() == 0 || !edge_support_connected(g)) {
    return Feasibility{Feasibility::Kind::none, 0, 0};
  }
  std::vector<Label> odd;
  for (const Label v : g.vertices()) {
    if (g.degree(v) % 2 == 1) odd.push_back(v);
  }
  if (odd.empty()) return Feasibility{Feasibility::Kind::circuit, 0, 0};
  if (odd.size() == 2) return Feasibility{Feasibility::Kind::open_path, odd[0], odd[1]};
  return Feasibility{Feasibility::Kind::none, 0, 0};
}

EulCountResult eul_counts(const Multigraph& g, const CountOptions& opts) {
  const std::size_t m = g.edge_count();
  if (m == 0) throw std::invalid_argument("graph has no edges");

  EulCountResult result;
  result.m = m;
  result.engine = opts.engine;

  if (opts.engine == Engine::oracle) {
    // Trail DP per start vertex; the pair {i, j} is filled from the i-sweep
    // (the j->i count is equal by reversal, no second sweep needed).
    for (const Label s : g.vertices()) {
      if (g.degree(s) == 0) continue;
      for (auto& [e, cnt] : trail_counts_from(g, s)) {
        if (e >= s && cnt != 0) result.table.emplace(BasisElement(s, e), std::move(cnt));
      }
    }
    return result;
  }

  result.table = count_trains(dominoes_from_graph(g), opts);
  return result;
}

}  // namespace traincount
