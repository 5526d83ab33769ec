#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zf/graph.hpp"

namespace zf {

/// A construction step could not make progress or produced a set that does
/// not stall. Indicates a violated precondition or a bug.
class AlgorithmError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Label : std::uint8_t { L, R, O, U };

/// Three-way labeling produced by the L/R/O partition algorithm. On
/// completion no vertex is U, |O| <= 1, every L vertex has at least two
/// neighbors in R or O and every R vertex at least two in L or O.
struct Partition {
  std::vector<Label> labels;
  bool seeded_from_even_cycle = false;

  VertexSet side(Label l) const;
  /// Clauses of the completion invariant that fail, empty when it holds.
  std::vector<std::string> violations(const Graph& g) const;
};

enum class Route : std::uint8_t {
  Disconnected,
  Base,
  Bipartite,
  CutVertex,
  Algo1Even,
  Algo1Odd,
  Delta1A,
  Delta1B,
  Delta2Case1,
  Delta2Case2a,
  Delta2Case2bi,
  Delta2Case2bii,
};

std::string_view route_name(Route r);

struct WitnessReport {
  VertexSet set;
  /// Outermost construction step first; each later entry is the route used
  /// on the reduced graph of the previous one.
  std::vector<Route> route;
  int guaranteed_bound = 0;
  bool stalled = false;

  Route top() const { return route.front(); }
  /// "delta1-a(delta2-case1(base))"
  std::string route_string() const;
};

/// Fills the larger side of a bipartition in which every vertex has at least
/// two neighbors across. Throws GraphError if that fails for some vertex.
WitnessReport witness_bipartite(const Graph& g, std::pair<VertexSet, VertexSet> sides);

/// Everything outside the smallest component of g - v, plus v. Requires g
/// connected, min degree >= 3 and v a cut vertex. The set always fails to
/// force; it is stalled unless v has a single neighbor in that component.
WitnessReport witness_cut_vertex(const Graph& g, Vertex v);

/// Requires g connected, min degree >= 3, no cut vertex.
Partition algo1_partition(const Graph& g);

/// Requires g connected with min degree >= 3.
WitnessReport witness_delta3(const Graph& g);

/// Stalled set of size >= floor((n-1)/2) for any graph.
WitnessReport witness_general(const Graph& g);

struct Verdict {
  std::vector<std::string> violations;
  bool pass() const { return violations.empty(); }
};

Verdict verify_witness(const Graph& g, const WitnessReport& report);

}  // namespace zf
