#include "zf/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "zf/census.hpp"
#include "zf/exact.hpp"
#include "zf/forcing.hpp"
#include "zf/graph6.hpp"
#include "zf/witness.hpp"

namespace zf::cli {

namespace {

using nlohmann::json;

json vertex_list(VertexSet s) { return s.to_vector(); }

std::string connectivity_class(const Graph& g) {
  if (g.n() == 1) return "trivial";
  if (!is_connected(g)) return "disconnected";
  if (g.n() > 2 && !cut_vertices(g).empty()) return "cut-vertex";
  return "biconnected";
}

json witness_json(const WitnessReport& r, const Verdict& v) {
  return {{"set", vertex_list(r.set)},
          {"size", r.set.size()},
          {"route", r.route_string()},
          {"guaranteed_bound", r.guaranteed_bound},
          {"stalled", r.stalled},
          {"verdict", {{"pass", v.pass()}, {"violations", v.violations}}}};
}

/// Graph6 records from the positional arguments, or from `in` when none.
/// Returns false after reporting a parse error.
bool collect_inputs(const std::vector<std::string>& records, std::istream& in,
                    std::vector<std::string>& out, std::ostream& err) {
  if (!records.empty()) {
    out = records;
    return true;
  }
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (number == 1 && line.starts_with(">>graph6<<")) line.erase(0, 10);
    if (!line.empty()) out.push_back(line);
  }
  if (out.empty()) {
    err << "error: no graph6 input\n";
    return false;
  }
  return true;
}

Graph parse_or_report(const std::string& record, std::size_t index, std::ostream& err,
                      bool& ok) {
  try {
    ok = true;
    return parse_graph6(record);
  } catch (const Graph6Error& e) {
    err << "error: record " << index + 1 << ": " << e.what() << "\n";
  } catch (const GraphError& e) {
    err << "error: record " << index + 1 << ": " << e.what() << "\n";
  }
  ok = false;
  return Graph::from_edges(1, {});
}

int cmd_analyze(const std::vector<std::string>& records, const AnalyzeOptions& opts,
                std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<std::string> inputs;
  if (!collect_inputs(records, in, inputs, err)) return kUsageError;
  int status = kOk;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    bool verified = true;
    try {
      out << analyze_document(inputs[i], opts, verified) << "\n";
    } catch (const Graph6Error& e) {
      err << "error: record " << i + 1 << ": " << e.what() << "\n";
      return kUsageError;
    } catch (const GraphError& e) {
      err << "error: record " << i + 1 << ": " << e.what() << "\n";
      return kUsageError;
    }
    if (!verified) status = kVerificationError;
  }
  return status;
}

int cmd_witness(const std::vector<std::string>& records, bool structured, std::istream& in,
                std::ostream& out, std::ostream& err) {
  std::vector<std::string> inputs;
  if (!collect_inputs(records, in, inputs, err)) return kUsageError;
  int status = kOk;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    bool ok = false;
    const Graph g = parse_or_report(inputs[i], i, err, ok);
    if (!ok) return kUsageError;
    WitnessReport r;
    try {
      r = witness_general(g);
    } catch (const AlgorithmError& e) {
      err << "error: " << inputs[i] << ": " << e.what() << "\n";
      status = kVerificationError;
      continue;
    }
    const Verdict v = verify_witness(g, r);
    if (!v.pass()) {
      // Unverified sets are never printed.
      err << "error: " << inputs[i] << ": witness failed verification:";
      for (const auto& why : v.violations) err << " " << why << ";";
      err << "\n";
      status = kVerificationError;
      continue;
    }
    if (structured) {
      json doc = witness_json(r, v);
      doc["graph6"] = inputs[i];
      doc["n"] = g.n();
      out << doc.dump() << "\n";
    } else {
      out << inputs[i] << "\tn=" << g.n() << "\tset=" << r.set.to_string()
          << "\tsize=" << r.set.size() << "\tbound=" << r.guaranteed_bound
          << "\troute=" << r.route_string() << "\tverdict=pass\n";
    }
  }
  return status;
}

int cmd_census(const CensusOptions& opts, const std::string& format, const std::string& output,
               std::ostream& out, std::ostream& err) {
  CensusResult result;
  try {
    result = run_census(opts);
  } catch (const Graph6Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  const std::string text =
      format == "structured" ? census_document(result) : format_census_table(result.table);
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream file(output, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << output << "\n";
      return kUsageError;
    }
    file << text;
  }
  for (const auto& e : result.ingestion_errors) err << "skipped: " << e << "\n";
  const Findings& f = result.findings;
  for (const auto& v : f.bound_violations) {
    err << "violation: " << v.graph6 << " n=" << v.n << " F=" << v.f << " " << v.detail << "\n";
  }
  for (const auto& v : f.table_violations) err << "violation: " << v << "\n";
  for (const auto& v : f.conjecture_counterexamples) {
    err << "counterexample: " << v.graph6 << " n=" << v.n << " F=Z=" << v.f << "\n";
  }
  if (!f.bound_violations.empty() || !f.table_violations.empty()) return kVerificationError;
  if (!result.ingestion_errors.empty()) return kUsageError;
  return kOk;
}

}  // namespace

std::string analyze_document(std::string_view graph6, const AnalyzeOptions& opts, bool& verified) {
  const Graph g = parse_graph6(graph6);
  verified = true;
  json doc;
  doc["schema"] = "zforce.analysis/1";
  doc["graph6"] = std::string(graph6);
  doc["n"] = g.n();
  doc["edges"] = g.edge_count();
  doc["min_degree"] = g.min_degree();
  doc["max_degree"] = g.max_degree();
  doc["connectivity"] = connectivity_class(g);

  const ExactOptions exact{opts.exact_cap, false};
  json checks = json::object();
  if (g.n() > opts.exact_cap) {
    const std::string reason = "n = " + std::to_string(g.n()) + " exceeds exact-search cap " +
                               std::to_string(opts.exact_cap);
    doc["zero_forcing"] = {{"omitted", reason}};
    doc["failed_zero_forcing"] = {{"omitted", reason}};
  } else {
    const ExactResult z = zero_forcing_number(g, exact);
    const ExactResult f = failed_zero_forcing_number(g, exact);
    const bool z_ok = z.witness.size() == z.value && is_zero_forcing(g, z.witness);
    const bool f_ok = f.witness.size() == f.value && !is_zero_forcing(g, f.witness);
    verified = verified && z_ok && f_ok;
    doc["zero_forcing"] = {{"value", z.value}, {"witness", vertex_list(z.witness)}};
    doc["failed_zero_forcing"] = {{"value", f.value}, {"witness", vertex_list(f.witness)}};
    checks["zero_forcing"] = z_ok;
    checks["failed_zero_forcing"] = f_ok;
  }

  try {
    const WitnessReport r = witness_general(g);
    const Verdict v = verify_witness(g, r);
    if (v.pass()) {
      doc["witness"] = witness_json(r, v);
    } else {
      doc["witness"] = {{"error", "construction failed verification"},
                        {"verdict", {{"pass", false}, {"violations", v.violations}}}};
    }
    checks["witness"] = v.pass();
    verified = verified && v.pass();
  } catch (const AlgorithmError& e) {
    doc["witness"] = {{"error", e.what()}};
    checks["witness"] = false;
    verified = false;
  }
  doc["verification"] = checks;
  return opts.pretty ? doc.dump(2) : doc.dump();
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Zero forcing and failed zero forcing analysis"};
  app.require_subcommand(1);

  AnalyzeOptions analyze_opts;
  std::vector<std::string> analyze_inputs;
  auto* analyze = app.add_subcommand("analyze", "Exact Z/F plus constructive witness as JSON");
  analyze->add_option("graph6", analyze_inputs, "graph6 records (default: read stdin)");
  analyze->add_option("--exact-cap", analyze_opts.exact_cap, "Largest n for exact Z/F search")
      ->check(CLI::Range(1, 62));
  analyze->add_flag("--pretty", analyze_opts.pretty, "Indent the JSON output");

  std::vector<std::string> witness_inputs;
  std::string witness_format = "table";
  auto* witness = app.add_subcommand("witness", "Construct a large stalled failed zero forcing set");
  witness->add_option("graph6", witness_inputs, "graph6 records (default: read stdin)");
  witness->add_option("--format", witness_format, "table or structured")
      ->check(CLI::IsMember({"table", "structured"}));

  CensusOptions census_opts;
  census_opts.fail_fast = false;
  std::string census_format = "table";
  std::string census_output;
  auto* census = app.add_subcommand("census", "F_k(n) / E_k(n) tables over connected graphs");
  census->add_option("--max-n", census_opts.max_n, "Largest vertex count")->check(CLI::Range(1, 62));
  census->add_option("--k-max", census_opts.k_max, "Largest k tabulated")->check(CLI::Range(0, 60));
  census->add_option("--jobs", census_opts.jobs, "Worker threads")->check(CLI::Range(1, 1024));
  census->add_option("--input", census_opts.inputs, "graph6 file replacing generation for its n")
      ->check(CLI::ExistingFile);
  census->add_option("--format", census_format, "table or structured")
      ->check(CLI::IsMember({"table", "structured"}));
  census->add_option("--output", census_output, "Write to this path instead of stdout");
  census->add_flag("--fail-fast", census_opts.fail_fast, "Abort on the first malformed input line");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  if (*analyze) return cmd_analyze(analyze_inputs, analyze_opts, in, out, err);
  if (*witness) return cmd_witness(witness_inputs, witness_format == "structured", in, out, err);
  return cmd_census(census_opts, census_format, census_output, out, err);
}

}  // namespace zf::cli
