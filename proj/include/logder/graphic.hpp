#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "logder/arrangement.hpp"

namespace logder {

/// Simple undirected graph on vertices 1..n.
class Graph {
 public:
  Graph() = default;
  /// Throws InvalidArgument on loops, repeated edges, or vertices outside 1..n.
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int n() const { return n_; }
  /// Edges with i < j, sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::size_t degree(int v) const;
  std::size_t min_degree() const;
  std::vector<std::vector<int>> adjacency() const;
  std::string to_string() const;  // "1-2,2-3"

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

/// "1-2,2-3,1-3"; n is the largest vertex unless given. Throws ParseError.
Graph parse_edge_list(std::string_view text, int n = 0);

/// Hyperplanes x_i - x_j, one per edge, in n variables. Throws EmptyGraph.
Arrangement graphic_arrangement(const Graph& g);

/// Connected components (DFS), each sorted.
std::vector<std::vector<int>> components(const Graph& g);
/// Articulation vertices (DFS low-link), sorted.
std::vector<int> articulation_vertices(const Graph& g);

/// Vertices with at least one edge, renumbered 1..k in increasing order.
Graph drop_isolated(const Graph& g);

/// sum x_i^2 d/dx_i is logarithmic for A(G) and not an Euler multiple.
bool squares_derivation_check(const Graph& g);

enum class GraphReason { Disconnected, Articulated, Neither };
std::string_view to_string(GraphReason r);

struct GraphMdr {
  int r = 0;
  GraphReason reason = GraphReason::Neither;
  std::optional<int> articulation;             // witness vertex, original numbering
  std::vector<std::vector<int>> components;    // original numbering
  std::vector<int> dropped;                    // isolated vertices removed
  std::string description() const;             // "r(G) = 1 (articulated at 2)"
};

/// r = 1 iff G (without isolated vertices) is disconnected or has an articulation
/// vertex, else 2. Throws TooFewEdges when |E| < 2.
GraphMdr mdr_graph(const Graph& g);

/// Every simple graph on exactly n labelled vertices with no isolated vertex and at
/// least two edges.
std::vector<Graph> enumerate_graphs(int n);

/// Deletion of edge k (0-based) and contraction of it (vertices merged, parallel edges
/// collapsed). Contracting a vertex pair renumbers the remaining vertices.
Graph delete_edge(const Graph& g, std::size_t k);
Graph contract_edge(const Graph& g, std::size_t k);

}  // namespace logder
