#include "zf/forcing.hpp"

namespace zf {

ForcingTrace closure(const Graph& g, VertexSet s) {
  ForcingTrace trace{s, {}, s};
  VertexSet& filled = trace.closure;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (!filled.contains(v)) continue;
      const VertexSet open = g.neighbors(v) - filled;
      if (open.size() == 1) {
        trace.forces.push_back({v, open.first()});
        filled |= open;
        changed = true;
      }
    }
  }
  return trace;
}

bool is_zero_forcing(const Graph& g, VertexSet s) {
  return derived_set(g, s & g.vertices()) == g.vertices();
}

bool is_stalled(const Graph& g, VertexSet s) {
  return s != g.vertices() && derived_set(g, s) == s;
}

VertexSet spent_vertices(const Graph& g, VertexSet s) {
  VertexSet spent;
  for (Vertex v : s) {
    if (g.neighbors(v).subset_of(s)) spent.insert(v);
  }
  return spent;
}

}  // namespace zf
