#pragma once

#include <functional>
#include <iosfwd>

#include "bbspan/knots.hpp"
#include "bbspan/span_conversion.hpp"

namespace bbspan {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalid = 1,    // bad input, failed validation, bad arguments
  kExitEmptySpan = 2,  // requested span is empty
  kExitVerifyFailed = 3,
};

struct CliHooks {
  /// Forwarded to the verify subcommand's table check.
  std::function<void(SpanIndex, RowMajorMatrix<double>&)> tamper;
};

/// Runs the `bbspan` command line. Output goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
            const CliHooks& hooks = {});

}  // namespace bbspan
