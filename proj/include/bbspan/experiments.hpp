#pragma once

// Randomized accuracy and timing studies of the two floating-point span
// conversions.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bbspan/knots.hpp"
#include "bbspan/scalar.hpp"

namespace bbspan {

/// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

/// Stateless stream: draw q of stream `key` is splitmix64(key + (q+1) * golden).
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  std::uint64_t next_u64();
  /// Uniform in [0, 1) with 53 random bits.
  double uniform01();
  /// Uniform in the open interval (lo, hi).
  double uniform_open(double lo, double hi);
  /// Uniform in the closed interval [lo, hi].
  double uniform_closed(double lo, double hi);
  /// Uniform integer in [lo, hi], by rejection.
  int uniform_int(int lo, int hi);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Seed of trial `trial` in cell (m, n); independent of evaluation order.
std::uint64_t trial_seed(std::uint64_t seed, int m, int n, int trial);

struct GeneratorConfig {
  int degree = 3;
  int spans = 10;
  std::uint64_t seed = 0;
  double first_knot_min = -10.0;
  double first_knot_max = 10.0;
  /// Gaps between distinct knots are uniform in (0, gap_max).
  double gap_max = 0.5;
  bool clamp_right = false;
  /// If positive, knots are rounded to multiples of 2^-grid_bits so that
  /// their exact rational images stay small.
  int grid_bits = 0;
};

/// Random knots: first knot uniform, distinct values separated by uniform
/// gaps, each value repeated 1..m times, last run truncated to fit. With
/// clamp_right the final m+1 knots equal t_n. Always passes `validate`.
KnotVector generate_knots(const GeneratorConfig& cfg);

/// -log10 of the relative error, clipped to [0, cap]; a zero reference
/// scores cap if computed is zero and -log10|computed| otherwise.
double correct_digits(double computed, double reference, double cap = 18.0);
/// Same, with the relative error formed exactly.
double correct_digits(double computed, const Rational& reference, double cap = 18.0);

struct ExperimentRecord {
  int degree = 0;
  int spans = 0;
  int trials = 0;
  std::optional<double> digits_new;
  std::optional<double> digits_deboor;
  std::optional<double> time_new_seconds;
  std::optional<double> time_deboor_seconds;

  /// time_deboor / time_new when both are present and time_new > 0.
  [[nodiscard]] std::optional<double> time_ratio() const;
};

enum class ExperimentKind { Accuracy, Timing };

struct ExperimentReport {
  ExperimentKind kind = ExperimentKind::Accuracy;
  std::vector<ExperimentRecord> records;
};

/// Mean correct digits of both float methods against an exact reference
/// over every entry of every non-empty span of `trials` clamped-right
/// vectors per (m, n). Trials may be spread over `jobs` threads; the
/// result does not depend on it.
ExperimentReport run_accuracy_experiment(const std::vector<int>& ms, const std::vector<int>& ns,
                                         int trials, std::uint64_t seed, int jobs = 1);

/// Wall-clock totals for converting every non-empty span of `trials`
/// unclamped vectors per (m, n), single-threaded, median of `repetitions`
/// timed passes after one warm-up pass.
ExperimentReport run_timing_experiment(const std::vector<int>& ms, const std::vector<int>& ns,
                                       int trials, std::uint64_t seed, int repetitions = 5);

/// Long format: one "m,n,metric,value" line per present field.
std::string report_csv(const ExperimentReport& report);
/// Aligned table, one row per (m, n).
std::string report_text(const ExperimentReport& report);

}  // namespace bbspan
