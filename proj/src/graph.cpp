#include "zf/graph.hpp"

#include <algorithm>
#include <string>

namespace zf {

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first_item = true;
  for (Vertex v : *this) {
    if (!first_item) out += ',';
    out += std::to_string(v);
    first_item = false;
  }
  out += '}';
  return out;
}

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw GraphError("vertex count must be in [1, 64], got " + std::to_string(n));
  }
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  check_order(n);
  std::vector<VertexSet> adj(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") out of range for n=" + std::to_string(n));
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    adj[u].insert(v);
    adj[v].insert(u);
  }
  return Graph(std::move(adj));
}

Graph Graph::from_adjacency(std::vector<VertexSet> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  const VertexSet all = VertexSet::full(n);
  for (Vertex v = 0; v < n; ++v) {
    if (!rows[v].subset_of(all)) throw GraphError("adjacency row out of range");
    if (rows[v].contains(v)) throw GraphError("self-loop at vertex " + std::to_string(v));
    for (Vertex u : rows[v]) {
      if (!rows[u].contains(v)) throw GraphError("adjacency is not symmetric");
    }
  }
  return Graph(std::move(rows));
}

int Graph::edge_count() const {
  int twice = 0;
  for (const auto& row : adj_) twice += row.size();
  return twice / 2;
}

int Graph::min_degree() const {
  int d = kMaxVertices;
  for (const auto& row : adj_) d = std::min(d, row.size());
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& row : adj_) d = std::max(d, row.size());
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  if (u == v || u < 0 || v < 0 || u >= n() || v >= n()) {
    throw GraphError("invalid edge for with_edge");
  }
  auto adj = adj_;
  adj[u].insert(v);
  adj[v].insert(u);
  return Graph(std::move(adj));
}

VertexSet Cycle::members() const {
  VertexSet s;
  for (Vertex v : vertices) s.insert(v);
  return s;
}

namespace {

VertexSet reach(const Graph& g, Vertex start, VertexSet allowed) {
  VertexSet seen = VertexSet::single(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    next = (next & allowed) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

}  // namespace

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> parts;
  VertexSet rest = g.vertices();
  while (!rest.empty()) {
    VertexSet comp = reach(g, rest.first(), rest);
    parts.push_back(comp);
    rest -= comp;
  }
  std::stable_sort(parts.begin(), parts.end(),
                   [](VertexSet a, VertexSet b) { return a.size() < b.size(); });
  return parts;
}

bool is_connected(const Graph& g) { return reach(g, 0, g.vertices()) == g.vertices(); }

VertexSet cut_vertices(const Graph& g) {
  if (!is_connected(g)) throw GraphError("cut_vertices requires a connected graph");
  const int n = g.n();
  std::vector<int> disc(n, -1), low(n, 0);
  VertexSet cuts;
  int timer = 0;
  auto dfs = [&](auto& self, Vertex v, Vertex parent) -> void {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (Vertex u : g.neighbors(v)) {
      if (u == parent) continue;
      if (disc[u] >= 0) {
        low[v] = std::min(low[v], disc[u]);
        continue;
      }
      ++children;
      self(self, u, v);
      low[v] = std::min(low[v], low[u]);
      if (parent >= 0 && low[u] >= disc[v]) cuts.insert(v);
    }
    if (parent < 0 && children > 1) cuts.insert(v);
  };
  dfs(dfs, 0, -1);
  return cuts;
}

namespace {

/// DFS forest with ascending roots and neighbor scans. In an undirected DFS
/// every non-tree edge joins a vertex to one of its ancestors.
struct DfsForest {
  std::vector<Vertex> parent;
  std::vector<int> depth;
  /// (descendant, ancestor) pairs, ordered by descendant then ancestor.
  std::vector<Edge> back_edges;

  explicit DfsForest(const Graph& g) : parent(g.n(), -1), depth(g.n(), -1) {
    auto visit = [&](auto& self, Vertex v) -> void {
      for (Vertex u : g.neighbors(v)) {
        if (depth[u] >= 0) continue;
        parent[u] = v;
        depth[u] = depth[v] + 1;
        self(self, u);
      }
    };
    for (Vertex r = 0; r < g.n(); ++r) {
      if (depth[r] >= 0) continue;
      depth[r] = 0;
      visit(visit, r);
    }
    for (Vertex v = 0; v < g.n(); ++v) {
      for (Vertex u : g.neighbors(v)) {
        if (depth[u] < depth[v] && parent[v] != u) {
          back_edges.emplace_back(v, u);
        }
      }
    }
  }

  /// Fundamental cycle of a back edge: descendant up the tree to ancestor.
  Cycle fundamental(Edge back) const {
    Cycle c;
    for (Vertex v = back.first; v != back.second; v = parent[v]) c.vertices.push_back(v);
    c.vertices.push_back(back.second);
    return c;
  }
};

/// Walks the unique cycle formed by per-vertex incidence masks `rows`.
std::optional<Cycle> trace_single_cycle(const std::vector<VertexSet>& rows) {
  VertexSet support;
  for (Vertex v = 0; v < static_cast<Vertex>(rows.size()); ++v) {
    if (rows[v].empty()) continue;
    if (rows[v].size() != 2) return std::nullopt;
    support.insert(v);
  }
  if (support.empty()) return std::nullopt;
  Cycle c;
  const Vertex start = support.first();
  Vertex prev = start;
  Vertex cur = rows[start].first();
  c.vertices.push_back(start);
  while (cur != start) {
    c.vertices.push_back(cur);
    Vertex next = (rows[cur] - VertexSet::single(prev)).first();
    prev = cur;
    cur = next;
  }
  if (c.members() != support) return std::nullopt;
  return c;
}

std::vector<VertexSet> incidence(const Cycle& c, int n) {
  std::vector<VertexSet> rows(n);
  const int len = c.length();
  for (int i = 0; i < len; ++i) {
    Vertex a = c.vertices[i];
    Vertex b = c.vertices[(i + 1) % len];
    rows[a].insert(b);
    rows[b].insert(a);
  }
  return rows;
}

}  // namespace

std::optional<Cycle> find_odd_cycle(const Graph& g) {
  DfsForest forest(g);
  for (Edge e : forest.back_edges) {
    if ((forest.depth[e.first] - forest.depth[e.second]) % 2 == 0) return forest.fundamental(e);
  }
  return std::nullopt;
}

std::optional<Cycle> find_even_cycle(const Graph& g) {
  DfsForest forest(g);
  std::vector<Cycle> odd;
  for (Edge e : forest.back_edges) {
    Cycle c = forest.fundamental(e);
    if (c.parity() == Parity::Even) return c;
    odd.push_back(std::move(c));
  }
  // Two odd fundamental cycles sharing a tree path of at least one edge sum
  // to a single even cycle; if no pair shares an edge the graph is a cactus
  // of odd cycles.
  for (std::size_t i = 0; i < odd.size(); ++i) {
    for (std::size_t j = i + 1; j < odd.size(); ++j) {
      if ((odd[i].members() & odd[j].members()).size() < 2) continue;
      auto a = incidence(odd[i], g.n());
      auto b = incidence(odd[j], g.n());
      for (Vertex v = 0; v < g.n(); ++v) a[v] = a[v] ^ b[v];
      if (auto c = trace_single_cycle(a); c && c->parity() == Parity::Even) return c;
    }
  }
  return std::nullopt;
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
  std::vector<int> color(g.n(), -1);
  VertexSet left, right;
  for (Vertex root = 0; root < g.n(); ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    std::vector<Vertex> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      for (Vertex u : g.neighbors(v)) {
        if (color[u] < 0) {
          color[u] = 1 - color[v];
          queue.push_back(u);
        } else if (color[u] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  for (Vertex v = 0; v < g.n(); ++v) (color[v] == 0 ? left : right).insert(v);
  return std::make_pair(left, right);
}

VertexSet DerivedGraph::lift(VertexSet s) const {
  VertexSet out;
  for (Vertex v : s) {
    if (to_old[v] >= 0) out.insert(to_old[v]);
  }
  return out;
}

DerivedGraph induced_subgraph(const Graph& g, VertexSet keep) {
  keep &= g.vertices();
  if (keep.empty()) throw GraphError("induced_subgraph requires a nonempty vertex set");
  std::vector<Vertex> to_old = keep.to_vector();
  std::vector<Vertex> to_new(g.n(), -1);
  for (std::size_t i = 0; i < to_old.size(); ++i) to_new[to_old[i]] = static_cast<Vertex>(i);
  std::vector<VertexSet> rows(to_old.size());
  for (std::size_t i = 0; i < to_old.size(); ++i) {
    for (Vertex u : g.neighbors(to_old[i]) & keep) rows[i].insert(to_new[u]);
  }
  return {Graph::from_adjacency(std::move(rows)), std::move(to_old)};
}

Condensation condense_path(const Graph& g, Vertex v, Vertex x, Vertex y) {
  if (v < 0 || v >= g.n() || g.degree(v) != 2 || x == y ||
      g.neighbors(v) != VertexSet::of({x, y})) {
    throw GraphError("condense_path requires deg(v) = 2 with neighbors exactly {x, y}");
  }
  const VertexSet removed = VertexSet::of({v, x, y});
  const VertexSet rest = g.vertices() - removed;
  const VertexSet outside = (g.neighbors(x) | g.neighbors(y)) - removed;

  std::vector<Vertex> to_old = rest.to_vector();
  std::vector<Vertex> to_new(g.n(), -1);
  for (std::size_t i = 0; i < to_old.size(); ++i) to_new[to_old[i]] = static_cast<Vertex>(i);
  const Vertex w = static_cast<Vertex>(to_old.size());
  std::vector<VertexSet> rows(to_old.size() + 1);
  for (std::size_t i = 0; i < to_old.size(); ++i) {
    for (Vertex u : g.neighbors(to_old[i]) & rest) rows[i].insert(to_new[u]);
  }
  for (Vertex z : outside) {
    rows[w].insert(to_new[z]);
    rows[to_new[z]].insert(w);
  }
  to_old.push_back(-1);
  return {{Graph::from_adjacency(std::move(rows)), std::move(to_old)}, w};
}

}  // namespace zf
