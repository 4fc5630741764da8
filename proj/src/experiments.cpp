#include "bbspan/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <thread>

#include "bbspan/io.hpp"
#include "bbspan/span_conversion.hpp"

namespace bbspan {
namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

double round_to_grid(double v, int bits) {
  if (bits <= 0) return v;
  const double scale = std::ldexp(1.0, bits);
  return std::nearbyint(v * scale) / scale;
}

void check_grid(const std::vector<int>& ms, const std::vector<int>& ns, int trials) {
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be >= 1");
  if (ms.empty() || ns.empty()) throw Error(ErrorCode::InvalidArgument, "empty (m, n) grid");
  for (int m : ms) {
    if (m < 1) throw Error(ErrorCode::InvalidArgument, "experiments need m >= 1");
  }
  for (int n : ns) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "experiments need n >= 1");
  }
}

struct DigitSums {
  double fast = 0.0;
  double slow = 0.0;
  long long entries = 0;
};

DigitSums accuracy_trial(int m, int n, std::uint64_t seed) {
  GeneratorConfig cfg;
  cfg.degree = m;
  cfg.spans = n;
  cfg.seed = seed;
  cfg.clamp_right = true;
  cfg.grid_bits = 32;
  const KnotVector kv = generate_knots(cfg);
  const RationalKnotVector exact = knot_cast<Rational>(kv);
  DigitSums sums;
  for (const SpanIndex j : kv.nonempty_spans()) {
    const auto fast = convert_span_new(kv, j);
    const auto slow = convert_span_deboor(kv, j);
    const auto ref = convert_span_deboor(exact, j);
    for (int k = 0; k <= m; ++k) {
      for (int c = 0; c <= m; ++c) {
        const Rational& r = ref.matrix()(k, c);
        sums.fast += correct_digits(fast.matrix()(k, c), r);
        sums.slow += correct_digits(slow.matrix()(k, c), r);
      }
    }
    sums.entries += static_cast<long long>(m + 1) * (m + 1);
  }
  return sums;
}

struct TimingInput {
  KnotVector kv;
  std::vector<SpanIndex> spans;
};

template <class Convert>
double timed_pass(const std::vector<TimingInput>& inputs, Convert convert, double& sink) {
  const auto start = std::chrono::steady_clock::now();
  double checksum = 0.0;
  for (const auto& in : inputs) {
    for (const SpanIndex j : in.spans) checksum += convert(in.kv, j).matrix()(0, 0);
  }
  const auto stop = std::chrono::steady_clock::now();
  sink += checksum;
  return std::chrono::duration<double>(stop - start).count();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t CounterRng::next_u64() { return splitmix64(key_ + ++counter_ * kGolden); }

double CounterRng::uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double CounterRng::uniform_open(double lo, double hi) {
  for (;;) {
    const double v = lo + (hi - lo) * uniform01();
    if (v > lo && v < hi) return v;
  }
}

double CounterRng::uniform_closed(double lo, double hi) {
  // 2^53 + 1 equally likely grid points including both ends.
  const std::uint64_t span = (std::uint64_t{1} << 53) + 1;
  std::uint64_t x = 0;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
  do {
    x = next_u64();
  } while (x >= limit);
  return lo + (hi - lo) * (static_cast<double>(x % span) * 0x1.0p-53);
}

int CounterRng::uniform_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
  std::uint64_t x = 0;
  do {
    x = next_u64();
  } while (x >= limit);
  return lo + static_cast<int>(x % span);
}

std::uint64_t trial_seed(std::uint64_t seed, int m, int n, int trial) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ static_cast<std::uint64_t>(m));
  h = splitmix64(h ^ static_cast<std::uint64_t>(n));
  return splitmix64(h ^ static_cast<std::uint64_t>(trial));
}

KnotVector generate_knots(const GeneratorConfig& cfg) {
  const int m = cfg.degree;
  const int n = cfg.spans;
  if (m < 0 || n < 1) throw Error(ErrorCode::InvalidArgument, "generator needs m >= 0 and n >= 1");
  if (m == 0 && n > 1) {
    throw Error(ErrorCode::InvalidArgument, "degree 0 allows no inner knots, so n must be 1");
  }
  CounterRng rng(splitmix64(cfg.seed));
  const auto total = static_cast<std::size_t>(n + 2 * m + 1);
  const auto next_value = [&](double from) {
    for (;;) {
      const double v = round_to_grid(from + rng.uniform_open(0.0, cfg.gap_max), cfg.grid_bits);
      if (v > from) return v;
    }
  };
  for (;;) {
    std::vector<double> t;
    t.reserve(total);
    double value = round_to_grid(rng.uniform_closed(cfg.first_knot_min, cfg.first_knot_max), cfg.grid_bits);
    while (t.size() < total) {
      const int run = m == 0 ? 1 : rng.uniform_int(1, m);
      for (int q = 0; q < run && t.size() < total; ++q) t.push_back(value);
      value = next_value(value);
    }
    if (cfg.clamp_right) {
      // t_n sits at offset n + m. Clamping a value shared with t_{n-1}
      // would raise an inner multiplicity, so move t_n off it first.
      const auto last = static_cast<std::size_t>(n + m);
      if (t[last - 1] == t[last]) t[last] = next_value(t[last - 1]);
      std::fill(t.begin() + static_cast<std::ptrdiff_t>(last), t.end(), t[last]);
    }
    try {
      return validate(m, n, std::move(t));
    } catch (const Error&) {
      // Only t_0 = t_n is possible here (one run covering the domain); redraw.
    }
  }
}

double correct_digits(double computed, double reference, double cap) {
  const auto clip = [cap](double d) { return std::clamp(d, 0.0, cap); };
  if (reference == 0.0) {
    return computed == 0.0 ? cap : clip(-std::log10(std::abs(computed)));
  }
  const double rel = std::abs(computed - reference) / std::abs(reference);
  return rel == 0.0 ? cap : clip(-std::log10(rel));
}

double correct_digits(double computed, const Rational& reference, double cap) {
  if (reference == 0) return correct_digits(computed, 0.0, cap);
  const Rational diff = Rational(computed) - reference;
  if (diff == 0) return cap;
  const double rel = to_double(abs(diff) / abs(reference));
  return rel == 0.0 ? cap : std::clamp(-std::log10(rel), 0.0, cap);
}

std::optional<double> ExperimentRecord::time_ratio() const {
  if (!time_new_seconds || !time_deboor_seconds || *time_new_seconds <= 0.0) return std::nullopt;
  return *time_deboor_seconds / *time_new_seconds;
}

ExperimentReport run_accuracy_experiment(const std::vector<int>& ms, const std::vector<int>& ns,
                                         int trials, std::uint64_t seed, int jobs) {
  check_grid(ms, ns, trials);
  ExperimentReport report;
  report.kind = ExperimentKind::Accuracy;
  const int workers = std::clamp(jobs, 1, trials);
  for (int m : ms) {
    for (int n : ns) {
      std::vector<DigitSums> per_trial(static_cast<std::size_t>(trials));
      std::atomic<int> next{0};
      const auto work = [&] {
        for (int t = next++; t < trials; t = next++) per_trial[t] = accuracy_trial(m, n, trial_seed(seed, m, n, t));
      };
      if (workers == 1) {
        work();
      } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
      }
      // Reduce in trial order so the sums do not depend on scheduling.
      DigitSums total;
      for (const auto& s : per_trial) {
        total.fast += s.fast;
        total.slow += s.slow;
        total.entries += s.entries;
      }
      ExperimentRecord rec;
      rec.degree = m;
      rec.spans = n;
      rec.trials = trials;
      rec.digits_new = total.fast / static_cast<double>(total.entries);
      rec.digits_deboor = total.slow / static_cast<double>(total.entries);
      report.records.push_back(rec);
    }
  }
  return report;
}

ExperimentReport run_timing_experiment(const std::vector<int>& ms, const std::vector<int>& ns,
                                       int trials, std::uint64_t seed, int repetitions) {
  check_grid(ms, ns, trials);
  if (repetitions < 1) throw Error(ErrorCode::InvalidArgument, "repetitions must be >= 1");
  ExperimentReport report;
  report.kind = ExperimentKind::Timing;
  double sink = 0.0;
  const auto fast = [](const KnotVector& kv, SpanIndex j) { return convert_span_new(kv, j); };
  const auto slow = [](const KnotVector& kv, SpanIndex j) { return convert_span_deboor(kv, j); };
  for (int m : ms) {
    for (int n : ns) {
      std::vector<TimingInput> inputs;
      inputs.reserve(static_cast<std::size_t>(trials));
      for (int t = 0; t < trials; ++t) {
        GeneratorConfig cfg;
        cfg.degree = m;
        cfg.spans = n;
        cfg.seed = trial_seed(seed, m, n, t);
        cfg.clamp_right = false;
        KnotVector kv = generate_knots(cfg);
        auto spans = kv.nonempty_spans();
        inputs.push_back({std::move(kv), std::move(spans)});
      }
      (void)timed_pass(inputs, fast, sink);
      (void)timed_pass(inputs, slow, sink);
      std::vector<double> fast_times;
      std::vector<double> slow_times;
      for (int r = 0; r < repetitions; ++r) {
        fast_times.push_back(timed_pass(inputs, fast, sink));
        slow_times.push_back(timed_pass(inputs, slow, sink));
      }
      ExperimentRecord rec;
      rec.degree = m;
      rec.spans = n;
      rec.trials = trials;
      rec.time_new_seconds = median(fast_times);
      rec.time_deboor_seconds = median(slow_times);
      report.records.push_back(rec);
    }
  }
  // Keeps the conversions observable.
  if (std::isnan(sink)) report.records.clear();
  return report;
}

std::string report_csv(const ExperimentReport& report) {
  std::string out = "m,n,metric,value\n";
  for (const auto& r : report.records) {
    const auto line = [&](const char* metric, double v) {
      out += std::to_string(r.degree) + ',' + std::to_string(r.spans) + ',' + metric + ',' +
             format_number(v) + '\n';
    };
    line("trials", r.trials);
    if (r.digits_new) line("digits_new", *r.digits_new);
    if (r.digits_deboor) line("digits_deboor", *r.digits_deboor);
    if (r.time_new_seconds) line("time_new_s", *r.time_new_seconds);
    if (r.time_deboor_seconds) line("time_deboor_s", *r.time_deboor_seconds);
    if (const auto ratio = r.time_ratio()) line("ratio", *ratio);
  }
  return out;
}

std::string report_text(const ExperimentReport& report) {
  std::ostringstream os;
  if (report.kind == ExperimentKind::Accuracy) {
    os << "Mean number of correct digits (exact reference)\n";
    os << std::setw(5) << "m" << std::setw(6) << "n" << std::setw(8) << "trials" << std::setw(12)
       << "new" << std::setw(12) << "de Boor" << '\n';
    for (const auto& r : report.records) {
      os << std::setw(5) << r.degree << std::setw(6) << r.spans << std::setw(8) << r.trials
         << std::setw(12) << fixed(r.digits_new.value_or(NAN), 3) << std::setw(12)
         << fixed(r.digits_deboor.value_or(NAN), 3) << '\n';
    }
  } else {
    os << "Running times (seconds, median of repetitions)\n";
    os << std::setw(5) << "m" << std::setw(6) << "n" << std::setw(8) << "trials" << std::setw(12)
       << "new" << std::setw(12) << "de Boor" << std::setw(9) << "ratio" << '\n';
    for (const auto& r : report.records) {
      os << std::setw(5) << r.degree << std::setw(6) << r.spans << std::setw(8) << r.trials
         << std::setw(12) << fixed(r.time_new_seconds.value_or(NAN), 6) << std::setw(12)
         << fixed(r.time_deboor_seconds.value_or(NAN), 6) << std::setw(9)
         << fixed(r.time_ratio().value_or(NAN), 2) << '\n';
    }
  }
  return os.str();
}

}  // namespace bbspan
