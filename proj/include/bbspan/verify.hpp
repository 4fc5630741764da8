#pragma once

// Invariant checks over every non-empty span of one knot vector.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bbspan/knots.hpp"
#include "bbspan/span_conversion.hpp"

namespace bbspan {

struct CheckResult {
  std::string name;
  bool passed = true;
  bool skipped = false;
  double max_deviation = 0.0;
  double tolerance = 0.0;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  [[nodiscard]] bool all_passed() const;
};

struct VerifyOptions {
  int samples_per_span = 100;
  std::uint64_t seed = 1;
  /// The exact comparison is skipped above this degree (rational cost grows fast).
  int max_exact_degree = 12;
  /// Test hook: rewrites each float table before it is checked.
  std::function<void(SpanIndex, RowMajorMatrix<double>&)> tamper;
};

VerifyReport verify_knots(const KnotVector& kv, const VerifyOptions& options = {});

std::string report_text(const VerifyReport& report);

}  // namespace bbspan
