#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "zf/graph.hpp"

namespace zf {

inline constexpr int kMaxCanonicalVertices = 16;

/// Upper-triangle adjacency bit string (graph6 pair order, first pair most
/// significant) of a graph under its canonical labeling. Equal iff the
/// graphs are isomorphic.
struct CanonicalForm {
  int n = 0;
  std::array<std::uint64_t, 2> words{};

  bool operator==(const CanonicalForm&) const = default;
  auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& c) const {
    std::uint64_t h = c.words[0] * 0x9E3779B97F4A7C15ULL;
    h ^= (c.words[1] + static_cast<std::uint64_t>(c.n)) + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

/// order[i] is the original vertex placed at canonical position i.
/// Degree-seeded equitable refinement, then individualization over the
/// first non-singleton cell keeping the lexicographically largest string;
/// twin vertices in a cell are branched on once. Throws GraphError for
/// n > 16.
std::vector<Vertex> canonical_order(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

/// Bit string of g under the labeling `order` (not necessarily canonical).
CanonicalForm encode_order(const Graph& g, const std::vector<Vertex>& order);

/// g relabeled by canonical_order.
Graph canonical_graph(const Graph& g);

/// The graph relabeled so that new vertex i is old vertex order[i].
Graph relabel(const Graph& g, const std::vector<Vertex>& order);

}  // namespace zf
