#include "bbspan/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <optional>
#include <sstream>

#include "bbspan/experiments.hpp"
#include "bbspan/oracle.hpp"

namespace bbspan {
namespace {

struct Tracker {
  CheckResult result;

  Tracker(std::string name, double tolerance) {
    result.name = std::move(name);
    result.tolerance = tolerance;
  }

  void observe(double deviation) {
    result.max_deviation = std::max(result.max_deviation, deviation);
    if (!(deviation <= result.tolerance)) result.passed = false;
  }
};

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerifyReport verify_knots(const KnotVector& kv, const VerifyOptions& options) {
  const int m = kv.degree();
  Tracker unity("partition of unity", 1e-12);
  Tracker equivalence("new vs de Boor (float)", 1e-10);
  Tracker exact("new vs de Boor (exact)", 0.0);
  Tracker reconstruction("reconstruction vs de Boor-Cox", 1e-12);
  Tracker nonnegative("nonnegativity", 1e-12);
  Tracker sparsity("boundary sparsity", 0.0);

  const bool run_exact = m <= options.max_exact_degree;
  std::optional<RationalKnotVector> qkv;
  if (run_exact) qkv = knot_cast<Rational>(kv);
  CounterRng rng(splitmix64(options.seed));

  for (const SpanIndex j : kv.nonempty_spans()) {
    auto fast = convert_span_new(kv, j).matrix();
    if (options.tamper) options.tamper(j, fast);
    const SpanTable<double> table(m, j, fast);
    const auto slow = convert_span_deboor(kv, j).matrix();

    for (int k = 0; k <= m; ++k) {
      unity.observe(std::abs(fast.row(k).sum() - 1.0));
      for (int c = 0; c <= m; ++c) {
        equivalence.observe(std::abs(fast(k, c) - slow(k, c)) / std::max(1.0, std::abs(slow(k, c))));
        nonnegative.observe(std::max(0.0, -fast(k, c)));
      }
      if (k >= 1) sparsity.observe(std::abs(fast(k, 0)));
      if (k <= m - 1) sparsity.observe(std::abs(fast(k, m)));
    }

    if (run_exact) {
      const auto a = convert_span_new(*qkv, j).matrix();
      const auto b = convert_span_deboor(*qkv, j).matrix();
      for (int k = 0; k <= m; ++k) {
        for (int c = 0; c <= m; ++c) exact.observe(std::abs(to_double(a(k, c) - b(k, c))));
      }
    }

    const double lo = kv.t(j.value);
    const double hi = kv.t(j.value + 1);
    for (int s = 0; s < options.samples_per_span; ++s) {
      double u = lo + (hi - lo) * rng.uniform01();
      if (!(u < hi)) u = lo;
      for (int i = j.value - m; i <= j.value; ++i) {
        const double expected = deboor_cox_eval(kv, i, u);
        reconstruction.observe(std::abs(reconstruct(table, kv, i, u) - expected) /
                               std::max(1.0, std::abs(expected)));
      }
    }
  }

  if (!run_exact) exact.result.skipped = true;
  return VerifyReport{{unity.result, equivalence.result, exact.result, reconstruction.result,
                       nonnegative.result, sparsity.result}};
}

std::string report_text(const VerifyReport& report) {
  std::ostringstream os;
  for (const auto& c : report.checks) {
    os << (c.skipped ? "SKIP" : c.passed ? "PASS" : "FAIL") << "  " << std::left << std::setw(32)
       << c.name << " max deviation " << std::scientific << std::setprecision(3) << c.max_deviation
       << " (tolerance " << c.tolerance << ")\n"
       << std::defaultfloat;
  }
  os << (report.all_passed() ? "all checks passed" : "some checks failed") << '\n';
  return os.str();
}

}  // namespace bbspan
