#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <set>

#include "json.hpp"
#include "support.hpp"
#include "zf/canonical.hpp"
#include "zf/census.hpp"
#include "zf/graph6.hpp"

namespace zf {
namespace {

using namespace zf::testing;

TEST(Canonical, TriangleUnderAllLabelings) {
  std::vector<Vertex> perm{0, 1, 2};
  const CanonicalForm base = canonical_form(complete(3));
  do {
    EXPECT_EQ(canonical_form(relabel(complete(3), perm)), base);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(Canonical, DistinguishesPathFromTriangle) {
  EXPECT_NE(canonical_form(path(3)), canonical_form(complete(3)));
}

TEST(Canonical, RelabeledPathsAgree) {
  const Graph a = path(4);
  const Graph b = Graph::from_edges(4, {{2, 0}, {0, 3}, {3, 1}});
  ASSERT_TRUE(oracle_isomorphic(a, b));
  EXPECT_EQ(canonical_form(a), canonical_form(b));
}

TEST(Canonical, OrderIsAPermutationAndEncodesTheForm) {
  const Graph g = petersen();
  std::vector<Vertex> order = canonical_order(g);
  EXPECT_EQ(canonical_form(canonical_graph(g)), canonical_form(g));
  EXPECT_EQ(encode_order(g, order), canonical_form(g));
  std::sort(order.begin(), order.end());
  std::vector<Vertex> ids(10);
  std::iota(ids.begin(), ids.end(), 0);
  EXPECT_EQ(order, ids);
  EXPECT_THROW(canonical_order(Graph::from_edges(17, {})), GraphError);
}

TEST(Canonical, MatchesPermutationOracle) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 1500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const Graph a = random_graph(rng, n, 0.2 + 0.1 * (trial % 6));
    const Graph b = random_graph(rng, n, 0.2 + 0.1 * (trial % 6));
    ASSERT_EQ(canonical_form(a) == canonical_form(b), oracle_isomorphic(a, b));
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    ASSERT_EQ(canonical_form(relabel(a, perm)), canonical_form(a));
  }
}

TEST(Canonical, InvariantUnderRelabelingUpTo16) {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 7 + static_cast<int>(rng() % 10);
    const Graph g = random_graph(rng, n, 0.15 + 0.1 * (trial % 7));
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    ASSERT_EQ(canonical_form(relabel(g, perm)), canonical_form(g));
  }
  // Highly symmetric cases stress the twin pruning.
  for (int n : {8, 12, 16}) {
    std::vector<Vertex> rev(n);
    std::iota(rev.rbegin(), rev.rend(), 0);
    EXPECT_EQ(canonical_form(relabel(complete(n), rev)), canonical_form(complete(n)));
    EXPECT_EQ(canonical_form(relabel(cycle(n), rev)), canonical_form(cycle(n)));
  }
  EXPECT_NE(canonical_form(complete_bipartite(3, 3)), canonical_form(disjoint_union(cycle(3), cycle(3))));
}

int connected_count(const std::vector<Graph>& gs) {
  return static_cast<int>(std::count_if(gs.begin(), gs.end(), [](const Graph& g) { return is_connected(g); }));
}

TEST(Generation, SmallCounts) {
  EXPECT_EQ(generate_graphs(1).size(), 1U);
  EXPECT_EQ(generate_graphs(3).size(), 4U);
  EXPECT_EQ(connected_count(generate_graphs(3)), 2);
  EXPECT_EQ(generate_graphs(4).size(), 11U);
  EXPECT_EQ(connected_count(generate_graphs(4)), 6);
  EXPECT_THROW(generate_graphs(0), std::invalid_argument);
  EXPECT_THROW(generate_graphs(10), std::invalid_argument);
}

TEST(Generation, MatchesLabeledDedupeOracle) {
  for (int n = 1; n <= 6; ++n) {
    const auto gs = generate_graphs(n);
    const auto [all, connected] = oracle_class_counts(n);
    EXPECT_EQ(static_cast<int>(gs.size()), all) << "n=" << n;
    EXPECT_EQ(connected_count(gs), connected) << "n=" << n;
    std::set<std::uint64_t> codes;
    for (const Graph& g : gs) codes.insert(oracle_min_code(g));
    EXPECT_EQ(codes.size(), gs.size()) << "duplicate class at n=" << n;
  }
}

TEST(Generation, IsomorphFreeAndSorted) {
  const auto gs = generate_graphs(7);
  EXPECT_EQ(gs.size(), 1044U);
  EXPECT_EQ(connected_count(gs), 853);
  std::vector<CanonicalForm> forms;
  for (const Graph& g : gs) {
    forms.push_back(canonical_form(g));
    ASSERT_EQ(canonical_graph(g), g) << "not in canonical labeling";
  }
  EXPECT_TRUE(std::is_sorted(forms.begin(), forms.end()));
  EXPECT_EQ(std::adjacent_find(forms.begin(), forms.end()), forms.end());
}

TEST(Census, SmallTables) {
  CensusOptions opts;
  opts.max_n = 6;
  opts.k_max = 2;
  const CensusResult r = run_census(opts);
  EXPECT_EQ(r.table.f(2, 4), 5);
  EXPECT_EQ(r.table.f(2, 5), 5);
  EXPECT_EQ(r.table.f(2, 6), 2);
  EXPECT_EQ(r.table.f_total(2), 12);
  EXPECT_EQ(r.table.f(1, 3), 2);
  EXPECT_EQ(r.table.f(1, 4), 1);
  EXPECT_EQ(r.table.e(1, 3), 1);
  EXPECT_EQ(r.table.e(1, 4), 1);
  EXPECT_EQ(r.table.connected_per_n.at(6), 112);
  EXPECT_TRUE(r.findings.clean());
}

TEST(Census, E1ClassesArePaths) {
  CensusOptions opts;
  opts.max_n = 6;
  opts.k_max = 1;
  std::vector<Graph> e1;
  run_census(opts, [&](const GraphRecord& rec) {
    if (rec.f == 1 && rec.z == 1) e1.push_back(rec.graph);
  });
  ASSERT_EQ(e1.size(), 2U);
  EXPECT_TRUE(oracle_isomorphic(e1[0], path(3)));
  EXPECT_TRUE(oracle_isomorphic(e1[1], path(4)));
}

TEST(Census, DetectsInjectedCounterexample) {
  CensusTable table;
  table.max_n = 9;
  table.k_max = 4;
  // Any graph serves as carrier; only (n, F, Z) matter to the detector.
  const GraphRecord fake{cycle(9), 2, 2};
  const GraphRecord fine{path(5), 2, 1};
  table.tally(fake);
  table.tally(fine);
  const std::vector<GraphRecord> records{fake, fine};
  const Findings f = check_bounds_and_conjecture(table, records);
  ASSERT_EQ(f.conjecture_counterexamples.size(), 1U);
  EXPECT_EQ(f.conjecture_counterexamples[0].n, 9);
  EXPECT_EQ(f.conjecture_counterexamples[0].f, 2);
}

TEST(Census, DetectsBoundAndTableViolations) {
  CensusTable table;
  table.max_n = 6;
  table.k_max = 4;
  const GraphRecord low{path(6), 1, 1};   // below floor((6-1)/2)
  const GraphRecord high{path(4), 3, 1};  // above n-2
  table.tally(low);
  table.tally(high);
  const std::vector<GraphRecord> records{low, high};
  const Findings f = check_bounds_and_conjecture(table, records);
  EXPECT_EQ(f.bound_violations.size(), 2U);
  EXPECT_FALSE(f.table_violations.empty());
}

TEST(Census, DeterministicAcrossJobs) {
  CensusOptions one;
  one.max_n = 7;
  CensusOptions many = one;
  many.jobs = 8;
  const CensusResult a = run_census(one), b = run_census(many);
  EXPECT_EQ(census_document(a), census_document(b));
  EXPECT_EQ(format_census_table(a.table), format_census_table(b.table));
}

TEST(Census, TableLayout) {
  CensusOptions opts;
  opts.max_n = 4;
  opts.k_max = 1;
  const std::string text = format_census_table(run_census(opts).table);
  EXPECT_EQ(text, "n =\t3\t4\ttotal\nF_1(n)\t2\t1\t3\nE_1(n)\t1\t1\t2\n");
}

TEST(Census, DocumentSchema) {
  CensusOptions opts;
  opts.max_n = 5;
  opts.k_max = 2;
  const auto doc = nlohmann::json::parse(census_document(run_census(opts)));
  EXPECT_EQ(doc["schema"], "zforce.census/1");
  EXPECT_EQ(doc["totals"]["f"]["2"], 10);
  EXPECT_EQ(doc["per_n"]["5"]["source"], "generated");
  EXPECT_TRUE(doc["violations"].empty());
}

class TempFile {
 public:
  explicit TempFile(const std::string& content) {
    path_ = std::filesystem::temp_directory_path() /
            ("zforce_census_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + ".g6");
    std::ofstream(path_) << content;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

TEST(Census, IngestsGraph6AndRecordsSource) {
  std::string text;
  for (const Graph& g : generate_graphs(5)) text += write_graph6(g) + "\n";
  TempFile file(text);
  CensusOptions opts;
  opts.max_n = 5;
  opts.k_max = 3;
  opts.inputs = {file.path()};
  const CensusResult r = run_census(opts);
  CensusOptions gen = opts;
  gen.inputs.clear();
  const CensusResult g = run_census(gen);
  EXPECT_EQ(r.table.f_counts, g.table.f_counts);
  EXPECT_EQ(r.table.e_counts, g.table.e_counts);
  EXPECT_EQ(r.table.sources.at(5).rfind("graph6:", 0), 0U);
  EXPECT_EQ(r.table.sources.at(4), "generated");
}

TEST(Census, MalformedInputHandling) {
  TempFile file("Dhc\nD~\nD?{\n");
  CensusOptions opts;
  opts.max_n = 5;
  opts.inputs = {file.path()};
  EXPECT_THROW(run_census(opts), Graph6Error);
  opts.fail_fast = false;
  const CensusResult r = run_census(opts);
  EXPECT_EQ(r.ingestion_errors.size(), 1U);
}

TEST(Census, RejectsUngeneratableOrders) {
  CensusOptions opts;
  opts.max_n = 10;
  EXPECT_THROW(run_census(opts), CensusError);
}

}  // namespace
}  // namespace zf
