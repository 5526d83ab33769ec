#include "zf/exact.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "zf/forcing.hpp"

namespace zf {

namespace {

constexpr std::size_t kPruneMemory = 256;

void check_cap(const Graph& g, const ExactOptions& opts) {
  const int cap = std::min(opts.max_vertices, 62);
  if (g.n() > cap) {
    throw InfeasibleInstance("exact search capped at " + std::to_string(cap) +
                             " vertices, graph has " + std::to_string(g.n()));
  }
}

/// Calls `visit` on every k-subset of {0..n-1} in increasing mask order
/// until it returns true; returns that mask.
template <typename Visit>
std::optional<VertexSet> first_subset(int n, int k, Visit&& visit) {
  if (k == 0) {
    if (visit(VertexSet{})) return VertexSet{};
    return std::nullopt;
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = (std::uint64_t{1} << k) - 1; mask < limit;
       mask = next_combination(mask)) {
    if (visit(VertexSet(mask))) return VertexSet(mask);
  }
  return std::nullopt;
}

VertexSet shrink_to_minimal_forcing(const Graph& g, VertexSet s) {
  for (Vertex v : s) {
    if (is_zero_forcing(g, s.without(v))) s.erase(v);
  }
  return s;
}

}  // namespace

ExactResult zero_forcing_number(const Graph& g, const ExactOptions& opts) {
  check_cap(g, opts);
  const VertexSet all = g.vertices();
  std::vector<VertexSet> failed_closures;
  for (int k = 0; k <= g.n(); ++k) {
    auto hit = first_subset(g.n(), k, [&](VertexSet s) {
      if (opts.prune) {
        for (VertexSet c : failed_closures) {
          if (s.subset_of(c)) return false;
        }
      }
      const VertexSet cl = derived_set(g, s);
      if (cl == all) return true;
      if (opts.prune && failed_closures.size() < kPruneMemory) failed_closures.push_back(cl);
      return false;
    });
    if (hit) return {k, *hit, ExactKind::ZeroForcing};
  }
  return {g.n(), all, ExactKind::ZeroForcing};
}

ExactResult failed_zero_forcing_number(const Graph& g, const ExactOptions& opts) {
  check_cap(g, opts);
  const VertexSet all = g.vertices();
  std::vector<VertexSet> forcing_cores;
  for (int k = g.n() - 1; k >= 0; --k) {
    auto hit = first_subset(g.n(), k, [&](VertexSet s) {
      if (opts.prune) {
        for (VertexSet core : forcing_cores) {
          if (core.subset_of(s)) return false;
        }
      }
      if (derived_set(g, s) != all) return true;
      if (opts.prune && forcing_cores.size() < kPruneMemory) {
        forcing_cores.push_back(shrink_to_minimal_forcing(g, s));
      }
      return false;
    });
    if (hit) return {k, *hit, ExactKind::FailedZeroForcing};
  }
  // Unreachable: the empty set never forces a nonempty graph.
  return {0, VertexSet{}, ExactKind::FailedZeroForcing};
}

}  // namespace zf
