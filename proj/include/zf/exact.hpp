#pragma once

#include <cstdint>
#include <stdexcept>

#include "zf/graph.hpp"

namespace zf {

/// Raised when an exact search is asked to run beyond its vertex cap.
class InfeasibleInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ExactKind { ZeroForcing, FailedZeroForcing };

struct ExactResult {
  int value = 0;
  VertexSet witness;
  ExactKind kind = ExactKind::ZeroForcing;
};

struct ExactOptions {
  int max_vertices = 24;
  /// Skip candidates already implied by earlier probes: subsets of known
  /// failed closures (Z) and supersets of known forcing sets (F). Reported
  /// witnesses are identical with and without it.
  bool prune = false;
};

/// Z(G): smallest zero forcing set, scanning sizes upward and, within a
/// size, masks in increasing numeric order.
ExactResult zero_forcing_number(const Graph& g, const ExactOptions& opts = {});

/// F(G): largest failed zero forcing set, scanning sizes downward from n-1.
ExactResult failed_zero_forcing_number(const Graph& g, const ExactOptions& opts = {});

/// Next mask with the same popcount (Gosper's hack). Zero-safe callers only.
constexpr std::uint64_t next_combination(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

}  // namespace zf
