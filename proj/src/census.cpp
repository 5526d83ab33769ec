#include "zf/census.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "json.hpp"
#include "zf/canonical.hpp"
#include "zf/exact.hpp"
#include "zf/graph6.hpp"

namespace zf {

std::vector<Graph> extend_classes(const std::vector<Graph>& classes) {
  std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
  std::vector<std::pair<CanonicalForm, Graph>> found;
  for (const Graph& g : classes) {
    const int n = g.n();
    std::vector<VertexSet> rows(n + 1);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const VertexSet hood(mask);
      for (Vertex v = 0; v < n; ++v) {
        rows[v] = hood.contains(v) ? g.neighbors(v).with(n) : g.neighbors(v);
      }
      rows[n] = hood;
      const Graph h = Graph::from_adjacency(rows);
      const std::vector<Vertex> order = canonical_order(h);
      const CanonicalForm form = encode_order(h, order);
      if (seen.insert(form).second) found.emplace_back(form, relabel(h, order));
    }
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& [form, graph] : found) out.push_back(std::move(graph));
  return out;
}

std::vector<Graph> generate_graphs(int n) {
  if (n < 1 || n > kMaxGeneratedOrder) {
    throw std::invalid_argument("built-in generation supports 1 <= n <= 9, got " +
                                std::to_string(n));
  }
  std::vector<Graph> level{Graph::from_edges(1, {})};
  for (int m = 1; m < n; ++m) level = extend_classes(level);
  return level;
}

long long CensusTable::f(int k, int n) const {
  auto it = f_counts.find({k, n});
  return it == f_counts.end() ? 0 : it->second;
}

long long CensusTable::e(int k, int n) const {
  auto it = e_counts.find({k, n});
  return it == e_counts.end() ? 0 : it->second;
}

long long CensusTable::f_total(int k) const {
  long long t = 0;
  for (const auto& [key, count] : f_counts) {
    if (key.first == k) t += count;
  }
  return t;
}

long long CensusTable::e_total(int k) const {
  long long t = 0;
  for (const auto& [key, count] : e_counts) {
    if (key.first == k) t += count;
  }
  return t;
}

void CensusTable::tally(const GraphRecord& r) {
  const int n = r.graph.n();
  ++f_counts[{r.f, n}];
  if (r.f == r.z) ++e_counts[{r.f, n}];
}

void Findings::merge(Findings other) {
  auto append = [](auto& into, auto& from) {
    into.insert(into.end(), std::make_move_iterator(from.begin()),
                std::make_move_iterator(from.end()));
  };
  append(bound_violations, other.bound_violations);
  append(conjecture_counterexamples, other.conjecture_counterexamples);
  append(table_violations, other.table_violations);
}

void Findings::sort() {
  auto by_graph = [](const Finding& a, const Finding& b) {
    return std::tie(a.n, a.graph6, a.detail) < std::tie(b.n, b.graph6, b.detail);
  };
  std::sort(bound_violations.begin(), bound_violations.end(), by_graph);
  std::sort(conjecture_counterexamples.begin(), conjecture_counterexamples.end(), by_graph);
  std::sort(table_violations.begin(), table_violations.end());
}

namespace {

Findings check_records(std::span<const GraphRecord> records) {
  Findings out;
  for (const GraphRecord& r : records) {
    const int n = r.graph.n();
    auto finding = [&](std::string detail) {
      return Finding{write_graph6(r.graph), n, r.f, r.z, std::move(detail)};
    };
    if (r.f < (n - 1) / 2) out.bound_violations.push_back(finding("F < floor((n-1)/2)"));
    if (n >= 2 && r.f > n - 2) out.bound_violations.push_back(finding("F > n-2"));
    if (r.f == r.z && n > r.f + 4) {
      out.conjecture_counterexamples.push_back(finding("F = Z = k with n > k+4"));
    }
  }
  return out;
}

std::vector<std::string> check_table(const CensusTable& table) {
  std::vector<std::string> out;
  for (const auto& [key, count] : table.e_counts) {
    if (count > table.f(key.first, key.second)) {
      out.push_back("E_" + std::to_string(key.first) + "(" + std::to_string(key.second) +
                    ") exceeds F_" + std::to_string(key.first) + "(" +
                    std::to_string(key.second) + ")");
    }
  }
  for (const auto& [key, count] : table.f_counts) {
    const auto [k, n] = key;
    if (count > 0 && n >= 2 && n < k + 2) {
      out.push_back("F_" + std::to_string(k) + "(" + std::to_string(n) + ") nonzero below n = k+2");
    }
  }
  return out;
}

GraphRecord evaluate(const Graph& g) {
  const ExactOptions opts{kMaxGeneratedOrder + 7, false};
  return {g, failed_zero_forcing_number(g, opts).value, zero_forcing_number(g, opts).value};
}

/// Evaluates the connected graphs of `batch` on `jobs` threads; output order
/// follows input order.
std::vector<GraphRecord> evaluate_batch(const std::vector<Graph>& batch, int jobs) {
  std::vector<const Graph*> connected;
  for (const Graph& g : batch) {
    if (is_connected(g)) connected.push_back(&g);
  }
  std::vector<GraphRecord> out(connected.size(), GraphRecord{Graph::from_edges(1, {})});
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < connected.size(); i = next++) out[i] = evaluate(*connected[i]);
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(connected.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return out;
}

}  // namespace

Findings check_bounds_and_conjecture(const CensusTable& table,
                                     std::span<const GraphRecord> records) {
  Findings out = check_records(records);
  out.table_violations = check_table(table);
  out.sort();
  return out;
}

CensusResult run_census(const CensusOptions& opts,
                        const std::function<void(const GraphRecord&)>& hook) {
  if (opts.max_n < 1) throw CensusError("max_n must be at least 1");
  if (opts.k_max < 0) throw CensusError("k_max must be nonnegative");

  CensusResult result;
  CensusTable& table = result.table;
  table.max_n = opts.max_n;
  table.k_max = opts.k_max;

  auto process = [&](const std::vector<Graph>& batch) {
    if (batch.empty()) return;
    const std::vector<GraphRecord> records = evaluate_batch(batch, opts.jobs);
    for (const Graph& g : batch) ++table.classes_per_n[g.n()];
    for (const GraphRecord& r : records) {
      ++table.connected_per_n[r.graph.n()];
      table.tally(r);
      if (hook) hook(r);
    }
    result.findings.merge(check_records(records));
  };

  std::map<int, std::set<std::string>> files_per_n;
  constexpr std::size_t kBatch = std::size_t{1} << 14;
  for (const std::string& path : opts.inputs) {
    std::ifstream in(path);
    if (!in) throw CensusError("cannot open graph6 input " + path);
    std::vector<Graph> batch;
    auto errors = read_graph6_stream(
        in,
        [&](Graph g, std::size_t) {
          if (g.n() > opts.max_n) return;
          files_per_n[g.n()].insert(path);
          batch.push_back(std::move(g));
          if (batch.size() == kBatch) {
            process(batch);
            batch.clear();
          }
        },
        Graph6ReadOptions{opts.fail_fast});
    process(batch);
    for (auto& e : errors) result.ingestion_errors.push_back(path + ": " + e.message);
  }
  for (const auto& [n, files] : files_per_n) {
    std::string joined;
    for (const auto& f : files) joined += (joined.empty() ? "" : ",") + f;
    table.sources[n] = "graph6:" + joined;
  }

  int generate_up_to = 0;
  for (int n = 1; n <= opts.max_n; ++n) {
    if (!files_per_n.contains(n)) generate_up_to = n;
  }
  if (generate_up_to > kMaxGeneratedOrder) {
    throw CensusError("no graph6 input for n = " + std::to_string(generate_up_to) +
                      " and built-in generation stops at n = 9");
  }
  std::vector<Graph> level;
  for (int n = 1; n <= generate_up_to; ++n) {
    level = n == 1 ? std::vector<Graph>{Graph::from_edges(1, {})} : extend_classes(level);
    if (files_per_n.contains(n)) continue;
    table.sources[n] = "generated";
    for (std::size_t start = 0; start < level.size(); start += kBatch) {
      const std::size_t stop = std::min(level.size(), start + kBatch);
      process(std::vector<Graph>(level.begin() + static_cast<std::ptrdiff_t>(start),
                                 level.begin() + static_cast<std::ptrdiff_t>(stop)));
    }
  }

  result.findings.table_violations = check_table(table);
  result.findings.sort();
  return result;
}

std::string format_census_table(const CensusTable& table) {
  std::ostringstream out;
  out << "n =";
  for (int n = 3; n <= table.max_n; ++n) out << '\t' << n;
  out << "\ttotal\n";
  auto row = [&](char name, int k, auto&& count, long long total) {
    out << name << '_' << k << "(n)";
    for (int n = 3; n <= table.max_n; ++n) {
      out << '\t';
      if (const long long c = count(k, n); c != 0) out << c;
    }
    out << '\t' << total << '\n';
  };
  for (int k = 1; k <= table.k_max; ++k) {
    row('F', k, [&](int kk, int n) { return table.f(kk, n); }, table.f_total(k));
  }
  for (int k = 1; k <= table.k_max; ++k) {
    row('E', k, [&](int kk, int n) { return table.e(kk, n); }, table.e_total(k));
  }
  return out.str();
}

namespace {

nlohmann::json finding_json(const Finding& f) {
  return {{"graph6", f.graph6}, {"n", f.n}, {"f", f.f}, {"z", f.z}, {"detail", f.detail}};
}

}  // namespace

std::string census_document(const CensusResult& result) {
  const CensusTable& t = result.table;
  nlohmann::json doc;
  doc["schema"] = "zforce.census/1";
  doc["max_n"] = t.max_n;
  doc["k_max"] = t.k_max;
  nlohmann::json f = nlohmann::json::object();
  nlohmann::json e = nlohmann::json::object();
  nlohmann::json totals = {{"f", nlohmann::json::object()}, {"e", nlohmann::json::object()}};
  for (int k = 1; k <= t.k_max; ++k) {
    const std::string key = std::to_string(k);
    f[key] = nlohmann::json::object();
    e[key] = nlohmann::json::object();
    for (int n = 1; n <= t.max_n; ++n) {
      if (t.f(k, n) != 0) f[key][std::to_string(n)] = t.f(k, n);
      if (t.e(k, n) != 0) e[key][std::to_string(n)] = t.e(k, n);
    }
    totals["f"][key] = t.f_total(k);
    totals["e"][key] = t.e_total(k);
  }
  doc["f_counts"] = f;
  doc["e_counts"] = e;
  doc["totals"] = totals;
  nlohmann::json per_n = nlohmann::json::object();
  for (int n = 1; n <= t.max_n; ++n) {
    const auto cls = t.classes_per_n.find(n);
    const auto con = t.connected_per_n.find(n);
    const auto src = t.sources.find(n);
    per_n[std::to_string(n)] = {
        {"classes", cls == t.classes_per_n.end() ? 0 : cls->second},
        {"connected", con == t.connected_per_n.end() ? 0 : con->second},
        {"source", src == t.sources.end() ? "" : src->second}};
  }
  doc["per_n"] = per_n;
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : result.findings.bound_violations) violations.push_back(finding_json(v));
  nlohmann::json counter = nlohmann::json::array();
  for (const auto& v : result.findings.conjecture_counterexamples) {
    counter.push_back(finding_json(v));
  }
  doc["violations"] = violations;
  doc["conjecture_counterexamples"] = counter;
  doc["table_violations"] = result.findings.table_violations;
  doc["ingestion_errors"] = result.ingestion_errors;
  return doc.dump(2) + "\n";
}

}  // namespace zf
