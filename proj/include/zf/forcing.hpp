#pragma once

#include <vector>

#include "zf/graph.hpp"

namespace zf {

struct Force {
  Vertex forcer;
  Vertex forced;

  bool operator==(const Force&) const = default;
};

/// Result of exhaustively applying the color change rule to `initial`.
struct ForcingTrace {
  VertexSet initial;
  std::vector<Force> forces;  ///< one legal chronology
  VertexSet closure;
};

/// Derived set of `s`, without recording the chronology. This is the hot
/// kernel behind the exact searches.
inline VertexSet derived_set(const Graph& g, VertexSet s) {
  const int n = g.n();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < n; ++v) {
      if (!s.contains(v)) continue;
      const VertexSet open = g.neighbors(v) - s;
      if (open.size() == 1) {
        s |= open;
        changed = true;
      }
    }
  }
  return s;
}

/// Derived set plus forces, scanning forcers in ascending order each round.
ForcingTrace closure(const Graph& g, VertexSet s);

bool is_zero_forcing(const Graph& g, VertexSet s);

/// S != V and S is its own derived set.
bool is_stalled(const Graph& g, VertexSet s);

/// Filled vertices whose neighbors are all filled.
VertexSet spent_vertices(const Graph& g, VertexSet s);

}  // namespace zf
