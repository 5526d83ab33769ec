#include "zf/graph6.hpp"

namespace zf {

namespace {

constexpr int kBias = 63;
constexpr int kMaxShortForm = 62;

std::string describe(const std::string& what, std::size_t offset, std::size_t line) {
  std::string out = "graph6: ";
  if (line > 0) out += "line " + std::to_string(line) + ", ";
  out += "offset " + std::to_string(offset) + ": " + what;
  return out;
}

}  // namespace

Graph6Error::Graph6Error(const std::string& what, std::size_t offset, std::size_t line)
    : std::runtime_error(describe(what, offset, line)), reason_(what), offset_(offset), line_(line) {}

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw Graph6Error("empty record", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < kBias || c > 126) {
      throw Graph6Error("byte " + std::to_string(c) + " outside 63..126", i);
    }
  }
  const int n = static_cast<unsigned char>(text[0]) - kBias;
  if (n > kMaxShortForm) throw Graph6Error("extended header (n > 62) is not supported", 0);
  if (n == 0) throw Graph6Error("graph with zero vertices", 0);

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() - 1 != body) {
    throw Graph6Error("expected " + std::to_string(body) + " body bytes, found " +
                      std::to_string(text.size() - 1),
                      text.size() < body + 1 ? text.size() : body + 1);
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = static_cast<unsigned char>(text[1 + k / 6]) - kBias;
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (body > 0 && bits % 6 != 0) {
    const int last = static_cast<unsigned char>(text[body]) - kBias;
    const int pad = static_cast<int>(6 - bits % 6);
    if ((last & ((1 << pad) - 1)) != 0) throw Graph6Error("nonzero padding bits", body);
  }
  return Graph::from_edges(n, edges);
}

std::string write_graph6(const Graph& g) {
  const int n = g.n();
  if (n > kMaxShortForm) throw GraphError("graph6 writer supports n <= 62 only");
  std::string out(1, static_cast<char>(kBias + n));
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(kBias + chunk);
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>(kBias + (chunk << (6 - filled)));
  return out;
}

std::vector<Graph6LineError> read_graph6_stream(
    std::istream& in, const std::function<void(Graph, std::size_t)>& sink,
    const Graph6ReadOptions& opts) {
  std::vector<Graph6LineError> errors;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::string_view record = line;
    if (number == 1 && record.starts_with(">>graph6<<")) {
      record.remove_prefix(10);
      if (record.empty()) continue;
    }
    try {
      sink(parse_graph6(record), number);
    } catch (const Graph6Error& e) {
      if (opts.fail_fast) throw Graph6Error(e.reason(), e.offset(), number);
      errors.push_back({number, Graph6Error(e.reason(), e.offset(), number).what()});
    }
  }
  return errors;
}

std::vector<Graph> read_graph6_all(std::istream& in) {
  std::vector<Graph> out;
  read_graph6_stream(in, [&](Graph g, std::size_t) { out.push_back(std::move(g)); });
  return out;
}

}  // namespace zf
