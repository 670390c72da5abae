#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "smoothfano/verify.hpp"

namespace sfano::cli {

/// Exit codes shared by all subcommands.
enum ExitCode : int {
  kOk = 0,
  kNegative = 1,   ///< invalid polytope, not equivalent, failed check
  kInputError = 2, ///< I/O, parse or usage error
  kSizeLimit = 3,
};

struct RunOptions {
  /// Colour pass/fail words; main() enables it for terminals unless NO_COLOR is set.
  bool color = false;
};

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const RunOptions& options = {});

/// Machine-readable form of a report, pretty-printed JSON.
std::string report_json(const std::string& file, const BoundsReport& report);
std::string reports_json(const std::vector<std::pair<std::string, BoundsReport>>& reports);

}  // namespace sfano::cli
