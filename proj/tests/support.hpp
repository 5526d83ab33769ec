#pragma once

// Named graphs, random generators and brute-force oracles shared by the
// test binaries. Oracles work on plain adjacency matrices and never call
// the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "zf/graph.hpp"

namespace zf::testing {

inline Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return Graph::from_edges(n, e);
}

/// Sides {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  }
  return Graph::from_edges(a + b, e);
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
    e.emplace_back(i, i + 5);
  }
  return Graph::from_edges(10, e);
}

/// Two K4 on {0,1,2,3} and {3,4,5,6} sharing vertex 3.
inline Graph two_k4_sharing_vertex() {
  std::vector<Edge> e;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      e.emplace_back(i, j);
      e.emplace_back(3 + i, 3 + j);
    }
  }
  return Graph::from_edges(7, e);
}

/// K4 on {0..3} and K4 on {4..7} joined by the bridge 3 -- 4.
inline Graph two_k4_bridged() {
  std::vector<Edge> e{{3, 4}};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      e.emplace_back(i, j);
      e.emplace_back(4 + i, 4 + j);
    }
  }
  return Graph::from_edges(8, e);
}

/// Disjoint union, `b` shifted after `a`.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(u + a.n(), v + a.n());
  return Graph::from_edges(a.n() + b.n(), e);
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) e.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, e);
}

inline Graph random_connected_graph(std::mt19937_64& rng, int n, double p) {
  // Random spanning tree plus independent extra edges.
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    e.emplace_back(pick(rng), v);
  }
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) e.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, e);
}

inline VertexSet random_subset(std::mt19937_64& rng, int n) {
  return VertexSet(rng() & VertexSet::full(n).bits());
}

/// Graph from the graph6-ordered pair bits of `code` (bit k = pair k).
inline Graph from_pair_code(int n, std::uint64_t code) {
  std::vector<Edge> e;
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if ((code >> k) & 1U) e.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, e);
}

// ---------------------------------------------------------------------------
// Oracles

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix_of(const Graph& g) {
  Matrix m(g.n(), std::vector<bool>(g.n(), false));
  for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = true;
  return m;
}

/// Color change rule applied one force at a time in an arbitrary order.
inline std::vector<bool> oracle_closure(const Matrix& m, std::vector<bool> filled,
                                        std::mt19937_64* shuffle = nullptr) {
  const int n = static_cast<int>(m.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (;;) {
    if (shuffle) std::shuffle(order.begin(), order.end(), *shuffle);
    bool forced = false;
    for (int v : order) {
      if (!filled[v]) continue;
      int open = -1, count = 0;
      for (int u = 0; u < n; ++u) {
        if (m[v][u] && !filled[u]) {
          ++count;
          open = u;
        }
      }
      if (count == 1) {
        filled[open] = true;
        forced = true;
        break;
      }
    }
    if (!forced) return filled;
  }
}

inline std::vector<bool> bools_of(VertexSet s, int n) {
  std::vector<bool> out(n);
  for (int v = 0; v < n; ++v) out[v] = s.contains(v);
  return out;
}

inline bool oracle_forces_all(const Matrix& m, std::uint64_t mask) {
  const int n = static_cast<int>(m.size());
  std::vector<bool> f(n);
  for (int v = 0; v < n; ++v) f[v] = (mask >> v) & 1U;
  auto c = oracle_closure(m, f);
  return std::all_of(c.begin(), c.end(), [](bool b) { return b; });
}

/// (Z, F) by enumerating every subset.
inline std::pair<int, int> oracle_z_f(const Graph& g) {
  const Matrix m = matrix_of(g);
  const int n = g.n();
  int z = n, f = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const int size = __builtin_popcountll(mask);
    if (oracle_forces_all(m, mask)) {
      z = std::min(z, size);
    } else {
      f = std::max(f, size);
    }
  }
  return {z, f};
}

inline int oracle_component_count(const Matrix& m, const std::vector<bool>& alive) {
  const int n = static_cast<int>(m.size());
  std::vector<bool> seen(n, false);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (!alive[s] || seen[s]) continue;
    ++count;
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < n; ++u) {
        if (m[v][u] && alive[u] && !seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
  }
  return count;
}

/// Vertices whose removal increases the number of components.
inline VertexSet oracle_cut_vertices(const Graph& g) {
  const Matrix m = matrix_of(g);
  std::vector<bool> alive(g.n(), true);
  const int base = oracle_component_count(m, alive);
  VertexSet out;
  for (int v = 0; v < g.n(); ++v) {
    alive[v] = false;
    if (oracle_component_count(m, alive) > base) out.insert(v);
    alive[v] = true;
  }
  return out;
}

/// Every simple cycle as its sorted edge list, grouped by length.
inline std::map<int, std::set<std::vector<Edge>>> oracle_cycles(const Graph& g) {
  std::map<int, std::set<std::vector<Edge>>> out;
  const int n = g.n();
  std::vector<int> walk;
  std::vector<bool> on(n, false);
  auto record = [&] {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < walk.size(); ++i) {
      int a = walk[i], b = walk[(i + 1) % walk.size()];
      edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    out[static_cast<int>(walk.size())].insert(edges);
  };
  // Cycles rooted at their smallest vertex.
  auto dfs = [&](auto& self, int root, int v) -> void {
    for (int u = root; u < n; ++u) {
      if (!g.adjacent(v, u)) continue;
      if (u == root && walk.size() >= 3) record();
      if (u <= root || on[u]) continue;
      on[u] = true;
      walk.push_back(u);
      self(self, root, u);
      walk.pop_back();
      on[u] = false;
    }
  };
  for (int r = 0; r < n; ++r) {
    walk = {r};
    on.assign(n, false);
    on[r] = true;
    dfs(dfs, r, r);
  }
  return out;
}

inline std::vector<Edge> cycle_edges(const Cycle& c) {
  std::vector<Edge> edges;
  for (int i = 0; i < c.length(); ++i) {
    int a = c.vertices[i], b = c.vertices[(i + 1) % c.length()];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

/// Graph6-order pair code of g relabeled by `perm` (new i = old perm[i]).
inline std::uint64_t permuted_code(const Graph& g, const std::vector<int>& perm) {
  std::uint64_t code = 0;
  int k = 0;
  for (int j = 1; j < g.n(); ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (g.adjacent(perm[i], perm[j])) code |= std::uint64_t{1} << k;
    }
  }
  return code;
}

/// Isomorphism invariant: smallest code over all n! relabelings.
inline std::uint64_t oracle_min_code(const Graph& g) {
  std::vector<int> perm(g.n());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, permuted_code(g, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool oracle_isomorphic(const Graph& a, const Graph& b) {
  return a.n() == b.n() && oracle_min_code(a) == oracle_min_code(b);
}

/// Classes of labeled graphs on n vertices, deduplicated by permutation:
/// (all classes, connected classes).
inline std::pair<int, int> oracle_class_counts(int n) {
  const int pairs = n * (n - 1) / 2;
  std::set<std::uint64_t> all, connected;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
    const Graph g = from_pair_code(n, code);
    const std::uint64_t canon = oracle_min_code(g);
    if (canon != code) continue;  // only the minimal labeling represents its class
    all.insert(canon);
    std::vector<bool> alive(n, true);
    if (oracle_component_count(matrix_of(g), alive) == 1) connected.insert(canon);
  }
  return {static_cast<int>(all.size()), static_cast<int>(connected.size())};
}

}  // namespace zf::testing
