#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ffpat::cli {

enum ExitCode : int { kSuccess = 0, kUsage = 1, kNumerical = 2 };

/// Runs the ffpat command line with `args` (program name excluded).  Artifact
/// paths go to `out`, diagnostics to `err` as single lines.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ffpat::cli
