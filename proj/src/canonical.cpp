#include "zf/canonical.hpp"

#include <optional>
#include <string>

namespace zf {

namespace {

using Cells = std::vector<VertexSet>;

/// Splits cells until every cell has a uniform neighbor count into every
/// other cell. Split pieces keep their position, ordered by count.
void refine(const Graph& g, Cells& cells) {
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t s = 0; s < cells.size() && !again; ++s) {
      const VertexSet splitter = cells[s];
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (cells[c].size() == 1) continue;
        std::array<VertexSet, kMaxCanonicalVertices + 1> buckets{};
        int used = 0;
        for (Vertex v : cells[c]) {
          auto& b = buckets[(g.neighbors(v) & splitter).size()];
          if (b.empty()) ++used;
          b.insert(v);
        }
        if (used == 1) continue;
        Cells pieces;
        for (const auto& b : buckets) {
          if (!b.empty()) pieces.push_back(b);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
        again = true;
        break;
      }
    }
  }
}

}  // namespace

CanonicalForm encode_order(const Graph& g, const std::vector<Vertex>& order) {
  CanonicalForm f;
  f.n = g.n();
  int k = 0;
  for (int j = 1; j < g.n(); ++j) {
    const VertexSet row = g.neighbors(order[j]);
    for (int i = 0; i < j; ++i, ++k) {
      if (row.contains(order[i])) f.words[k / 64] |= std::uint64_t{1} << (63 - k % 64);
    }
  }
  return f;
}

namespace {

bool twins(const Graph& g, Vertex u, Vertex v) {
  return g.neighbors(u).without(v) == g.neighbors(v).without(u);
}

struct Search {
  const Graph& g;
  std::optional<CanonicalForm> best;
  std::vector<Vertex> best_order;

  void run(Cells cells) {
    refine(g, cells);
    std::size_t target = 0;
    while (target < cells.size() && cells[target].size() == 1) ++target;
    if (target == cells.size()) {
      std::vector<Vertex> order;
      order.reserve(cells.size());
      for (VertexSet c : cells) order.push_back(c.first());
      CanonicalForm code = encode_order(g, order);
      if (!best || code > *best) {
        best = code;
        best_order = std::move(order);
      }
      return;
    }
    const VertexSet cell = cells[target];
    VertexSet tried;
    for (Vertex v : cell) {
      bool redundant = false;
      for (Vertex t : tried) {
        if (twins(g, v, t)) {
          redundant = true;
          break;
        }
      }
      if (redundant) continue;
      tried.insert(v);
      Cells next = cells;
      next[target] = cell.without(v);
      next.insert(next.begin() + static_cast<std::ptrdiff_t>(target), VertexSet::single(v));
      run(std::move(next));
    }
  }
};

}  // namespace

std::vector<Vertex> canonical_order(const Graph& g) {
  if (g.n() > kMaxCanonicalVertices) {
    throw GraphError("canonical labeling supports n <= 16, got " + std::to_string(g.n()));
  }
  Search search{g, std::nullopt, {}};
  search.run(Cells{g.vertices()});
  return search.best_order;
}

CanonicalForm canonical_form(const Graph& g) { return encode_order(g, canonical_order(g)); }

Graph relabel(const Graph& g, const std::vector<Vertex>& order) {
  std::vector<Vertex> pos(g.n());
  for (int i = 0; i < g.n(); ++i) pos[order[i]] = i;
  std::vector<VertexSet> rows(g.n());
  for (int i = 0; i < g.n(); ++i) {
    for (Vertex u : g.neighbors(order[i])) rows[i].insert(pos[u]);
  }
  return Graph::from_adjacency(std::move(rows));
}

Graph canonical_graph(const Graph& g) { return relabel(g, canonical_order(g)); }

}  // namespace zf
