#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace zf::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,        ///< bad flags, unreadable or unparsable input
  kVerificationError = 2  ///< a reported set failed verification or a bound was violated
};

struct AnalyzeOptions {
  int exact_cap = 20;
  bool pretty = false;
};

/// JSON analysis document for one graph6 record (schema "zforce.analysis/1").
/// Sets `verified` to false if any reported set failed its check.
std::string analyze_document(std::string_view graph6, const AnalyzeOptions& opts, bool& verified);

/// Entry point shared by the executable and the tests.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace zf::cli
