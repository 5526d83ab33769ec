#pragma once

#include <functional>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zf/graph.hpp"

namespace zf {

/// Malformed graph6 input. `line` is 1-based (0 when parsing a lone record);
/// `offset` is the 0-based byte position within the record.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset, std::size_t line = 0);

  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }
  std::string reason() const { return reason_; }

 private:
  std::string reason_;
  std::size_t offset_;
  std::size_t line_;
};

/// Short-form graph6 only (n <= 62). Pad bits must be zero.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

struct Graph6ReadOptions {
  bool fail_fast = true;
};

struct Graph6LineError {
  std::size_t line;
  std::string message;
};

/// Reads newline-delimited records, skipping blank lines and a leading
/// ">>graph6<<" marker; CRLF is accepted. `sink` receives each graph with its
/// line number. In fail-fast mode the first bad line throws Graph6Error;
/// otherwise bad lines are collected and returned.
std::vector<Graph6LineError> read_graph6_stream(
    std::istream& in, const std::function<void(Graph, std::size_t)>& sink,
    const Graph6ReadOptions& opts = {});

/// Convenience wrapper collecting the whole stream (fail-fast).
std::vector<Graph> read_graph6_all(std::istream& in);

}  // namespace zf
