#pragma once

#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zf/graph.hpp"

namespace zf {

inline constexpr int kMaxGeneratedOrder = 9;

/// One representative per isomorphism class of graphs on n vertices
/// (connected or not), in canonical labeling, sorted by canonical form.
/// Supports 1 <= n <= 9.
std::vector<Graph> generate_graphs(int n);

/// Classes on n+1 vertices from the full list of classes on n vertices.
std::vector<Graph> extend_classes(const std::vector<Graph>& classes);

/// Exact invariants of one connected graph.
struct GraphRecord {
  Graph graph;
  int f = 0;
  int z = 0;
};

/// F_k(n) and E_k(n) tallies over connected classes.
struct CensusTable {
  int max_n = 0;
  int k_max = 4;
  std::map<std::pair<int, int>, long long> f_counts;  ///< (k, n) -> #classes with F = k
  std::map<std::pair<int, int>, long long> e_counts;  ///< (k, n) -> #classes with F = Z = k
  std::map<int, long long> classes_per_n;             ///< every class read or generated
  std::map<int, long long> connected_per_n;
  std::map<int, std::string> sources;                 ///< n -> "generated" or "graph6:<files>"

  long long f(int k, int n) const;
  long long e(int k, int n) const;
  long long f_total(int k) const;
  long long e_total(int k) const;

  void tally(const GraphRecord& r);
};

struct Finding {
  std::string graph6;
  int n = 0;
  int f = 0;
  int z = 0;
  std::string detail;
};

struct Findings {
  std::vector<Finding> bound_violations;
  std::vector<Finding> conjecture_counterexamples;
  std::vector<std::string> table_violations;

  bool clean() const {
    return bound_violations.empty() && conjecture_counterexamples.empty() &&
           table_violations.empty();
  }
  void merge(Findings other);
  /// Orders exemplars by (n, graph6) so output does not depend on scheduling.
  void sort();
};

/// Per graph: floor((n-1)/2) <= F <= n-2 (upper bound for n >= 2), and
/// F = Z = k with n > k + 4 reported as a counterexample to the n <= k + 4
/// question. Per table: E <= F pointwise and no F_k(n) with 2 <= n < k + 2.
Findings check_bounds_and_conjecture(const CensusTable& table,
                                     std::span<const GraphRecord> records);

struct CensusOptions {
  int max_n = 8;
  int k_max = 4;
  int jobs = 1;
  /// graph6 files; any n they contain replaces built-in generation for that n.
  std::vector<std::string> inputs;
  bool fail_fast = true;
};

struct CensusResult {
  CensusTable table;
  Findings findings;
  std::vector<std::string> ingestion_errors;
};

/// Raised when the census cannot obtain a complete source for some n.
class CensusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluates F and Z exactly for every connected class up to max_n.
/// `hook`, when set, sees every record (from the calling thread, in a
/// deterministic order per batch).
CensusResult run_census(const CensusOptions& opts,
                        const std::function<void(const GraphRecord&)>& hook = {});

/// Tab-separated rows F_1..F_kmax and E_1..E_kmax over columns n = 3..max_n,
/// blank for zero, with a trailing total column.
std::string format_census_table(const CensusTable& table);

/// Self-describing JSON document (schema "zforce.census/1").
std::string census_document(const CensusResult& result);

}  // namespace zf
