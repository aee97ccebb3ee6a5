#pragma once

#include <span>
#include <vector>

#include "traincount/domino.hpp"

namespace traincount {

// Undirected multigraph. Edges are an ordered list so parallel edges stay
// distinguishable by position; isolated vertices are allowed.
class Multigraph {
public:
  Multigraph() = default;

  static Multigraph from_edges(std::span<const BasisElement> edges);

  void add_vertex(Label v);
  void add_edge(BasisElement e);  // inserts endpoints into the vertex set

  std::span<const Label> vertices() const { return vertices_; }  // sorted, unique
  std::span<const BasisElement> edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_vertex(Label v) const;

  // Loops count twice, as in the degree handshake; note adjacency_matrix
  // still puts coefficient 1 on a loop's diagonal element.
  std::size_t degree(Label v) const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
  std::vector<Label> vertices_;
  std::vector<BasisElement> edges_;
};

// One vertex per label appearing in the list, one edge per piece, order
// preserved.
Multigraph graph_from_dominoes(const PieceList& pieces);

// Inverse of graph_from_dominoes up to isolated vertices (they have no piece
// to map to and are dropped).
PieceList dominoes_from_graph(const Multigraph& g);

// Sum of e_bar(i,j) over the edge list; parallel edges accumulate and a loop
// at i contributes 1 to the (i,i) element.
SymMatrix adjacency_matrix(const Multigraph& g);

// Classical degree-parity/connectivity screen. Used as a cross-check against
// the counting engines, never as a shortcut inside them.
struct Feasibility {
  enum class Kind { circuit, open_path, none };

  Kind kind = Kind::none;
  // The two odd-degree endpoints when kind == open_path, with u <= v.
  Label u = 0;
  Label v = 0;

  friend bool operator==(const Feasibility&, const Feasibility&) = default;
};

// circuit: connected on non-isolated vertices, all degrees even.
// open_path: connected, exactly two odd vertices (the reported endpoints).
// none: anything else; an edgeless graph reports none.
Feasibility eulerian_feasibility(const Multigraph& g);

struct EulCountResult {
  CountTable table;  // {i, j} -> number of eulerian paths from i to j
  std::size_t m = 0;
  Engine engine = Engine::dp;
};

// Eulerian path counts per endpoint pair. Engines naive/dp go through the
// domino correspondence and the symmetrization; Engine::oracle runs the
// independent trail DP and never touches the algebra.
EulCountResult eul_counts(const Multigraph& g, const CountOptions& opts = {});

}  // namespace traincount
