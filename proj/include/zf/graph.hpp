#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zf/vertex_set.hpp"

namespace zf {

/// Raised for malformed graph construction or violated structural preconditions.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on at most 64 vertices.
class Graph {
 public:
  /// Symmetric closure of `edges`; duplicates collapse. Rejects n outside
  /// [1, 64], out-of-range endpoints and self-loops.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  /// Rows must already be symmetric and loop-free; validated.
  static Graph from_adjacency(std::vector<VertexSet> rows);

  int n() const { return static_cast<int>(adj_.size()); }
  VertexSet vertices() const { return VertexSet::full(n()); }
  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  int degree(Vertex v) const { return adj_[v].size(); }
  int edge_count() const;
  int min_degree() const;
  int max_degree() const;
  std::vector<Edge> edges() const;

  /// Copy with the edge u-v added.
  Graph with_edge(Vertex u, Vertex v) const;

  bool operator==(const Graph&) const = default;

 private:
  explicit Graph(std::vector<VertexSet> adj) : adj_(std::move(adj)) {}

  std::vector<VertexSet> adj_;
};

enum class Parity { Even, Odd };

/// Simple cycle given as a closed vertex sequence (last adjacent to first).
struct Cycle {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  Parity parity() const { return length() % 2 == 0 ? Parity::Even : Parity::Odd; }
  VertexSet members() const;
};

/// Components ordered by size, then by smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Articulation points. Throws GraphError on a disconnected graph.
VertexSet cut_vertices(const Graph& g);

std::optional<Cycle> find_even_cycle(const Graph& g);
std::optional<Cycle> find_odd_cycle(const Graph& g);

/// (L, R) when g is bipartite; per component the side holding the lowest
/// vertex goes to L.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);

/// A relabeled graph together with the correspondence to its parent.
/// `to_old[i]` is the parent vertex for new vertex i, or -1 for a vertex
/// with no parent counterpart (the contracted vertex of a condensation).
struct DerivedGraph {
  Graph graph;
  std::vector<Vertex> to_old;

  /// Maps a vertex set of the derived graph back to the parent, dropping
  /// vertices without a counterpart.
  VertexSet lift(VertexSet s) const;
};

/// Subgraph induced by `keep`, vertices renumbered in increasing order.
DerivedGraph induced_subgraph(const Graph& g, VertexSet keep);

struct Condensation {
  DerivedGraph derived;
  Vertex w;  ///< contracted vertex, always the last index of the new graph
};

/// Removes v and its two neighbors x, y and adds one vertex w adjacent to
/// their outside neighborhoods. Requires N(v) = {x, y}.
Condensation condense_path(const Graph& g, Vertex v, Vertex x, Vertex y);

}  // namespace zf
