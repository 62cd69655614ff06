#pragma once

#include <ostream>

namespace hopfc::cli {

enum ExitCode { kPass = 0, kCheckFailure = 1, kUsage = 2, kDivergence = 3 };

/// Runs the hopfc command line; the report goes to `out` (or --out), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hopfc::cli
