#include "bbspan/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bbspan/experiments.hpp"
#include "bbspan/io.hpp"
#include "bbspan/verify.hpp"

namespace bbspan {
namespace {

struct KnotSource {
  std::string file;
  std::string inline_spec;
  std::optional<int> degree;
};

struct Options {
  KnotSource source;
  std::optional<int> span;
  std::optional<double> at;
  int function = 0;
  std::string method = "new";
  std::string format = "text";
  std::string out_path;
  std::uint64_t seed = 1;
  int bench_trials = 10;
  int accuracy_trials = 200;
  int samples = 100;
  int repetitions = 5;
  int jobs = 1;
  std::vector<int> ms;
  std::vector<int> ns;
};

void add_knot_options(CLI::App& cmd, KnotSource& src) {
  auto* file = cmd.add_option("--knots", src.file, "knot file (JSON or text)");
  auto* spec = cmd.add_option("--inline", src.inline_spec, "knots inline, e.g. \"2 3: 0 0 0 1 2 3 3 3\"");
  file->excludes(spec);
  spec->excludes(file);
  cmd.add_option("--degree", src.degree, "degree to use (at most the vector's degree)");
}

KnotVector load_knots(const KnotSource& src) {
  if (src.file.empty() && src.inline_spec.empty()) {
    throw Error(ErrorCode::InvalidArgument, "one of --knots or --inline is required");
  }
  KnotVector kv = src.file.empty() ? parse_knots(src.inline_spec) : read_knots_file(src.file);
  if (src.degree && (*src.degree < 0 || *src.degree > kv.degree())) {
    throw Error(ErrorCode::InvalidArgument, "--degree " + std::to_string(*src.degree) +
                                                " is outside 0.." + std::to_string(kv.degree()));
  }
  return kv;
}

int working_degree(const KnotSource& src, const KnotVector& kv) { return src.degree.value_or(kv.degree()); }

SpanIndex resolve_span(const Options& opt, const KnotVector& kv) {
  if (opt.span) return SpanIndex{*opt.span};
  if (opt.at) return find_span(kv, *opt.at);
  throw Error(ErrorCode::InvalidArgument, "one of --span or --at is required");
}

void emit(const Options& opt, const std::string& text, std::ostream& out) {
  if (opt.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.out_path);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write '" + opt.out_path + "'");
  file << text;
}

int cmd_validate(const Options& opt, std::ostream& out) {
  const KnotVector kv = load_knots(opt.source);
  if (opt.source.degree && *opt.source.degree != kv.degree()) {
    throw Error(ErrorCode::InvalidArgument, "knot vector has degree " + std::to_string(kv.degree()));
  }
  out << "valid: degree " << kv.degree() << ", " << kv.spans() << " spans, "
      << kv.nonempty_spans().size() << " non-empty\n";
  return kExitOk;
}

int cmd_convert(const Options& opt, std::ostream& out) {
  const KnotVector kv = load_knots(opt.source);
  const int m = working_degree(opt.source, kv);
  const SpanIndex j = resolve_span(opt, kv);
  const Format format = parse_format(opt.format);
  std::string text;
  if (opt.method == "exact") {
    text = write_table(convert_span_new(knot_cast<Rational>(kv), j, m), format);
  } else if (opt.method == "deboor") {
    text = write_table(convert_span_deboor(kv, j, m), format);
  } else {
    text = write_table(convert_span_new(kv, j, m), format);
  }
  emit(opt, text, out);
  return kExitOk;
}

int cmd_eval(const Options& opt, std::ostream& out) {
  const KnotVector kv = load_knots(opt.source);
  const int m = working_degree(opt.source, kv);
  if (!opt.at) throw Error(ErrorCode::InvalidArgument, "--at is required");
  const double u = *opt.at;
  const SpanIndex j = find_span(kv, u);
  if (opt.method == "exact") {
    const auto qkv = knot_cast<Rational>(kv);
    out << format_number(reconstruct(convert_span_new(qkv, j, m), qkv, opt.function, Rational(u))) << '\n';
  } else {
    const auto table = opt.method == "deboor" ? convert_span_deboor(kv, j, m) : convert_span_new(kv, j, m);
    out << format_number(reconstruct(table, kv, opt.function, u)) << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out, const CliHooks& hooks) {
  const KnotVector kv = load_knots(opt.source);
  VerifyOptions vo;
  vo.samples_per_span = opt.samples;
  vo.seed = opt.seed;
  vo.tamper = hooks.tamper;
  const VerifyReport report = verify_knots(kv, vo);
  out << report_text(report);
  return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

int cmd_experiment(const Options& opt, bool timing, std::ostream& out) {
  const ExperimentReport report =
      timing ? run_timing_experiment(opt.ms, opt.ns, opt.bench_trials, opt.seed, opt.repetitions)
             : run_accuracy_experiment(opt.ms, opt.ns, opt.accuracy_trials, opt.seed, opt.jobs);
  const std::string csv = report_csv(report);
  const std::string text = report_text(report);
  if (!opt.out_path.empty()) {
    std::ofstream csv_file(opt.out_path + ".csv");
    std::ofstream text_file(opt.out_path + ".txt");
    if (!csv_file || !text_file) {
      throw Error(ErrorCode::InvalidArgument, "cannot write '" + opt.out_path + ".{csv,txt}'");
    }
    csv_file << csv;
    text_file << text;
  }
  out << (opt.format == "csv" ? csv : text);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
            const CliHooks& hooks) {
  CLI::App app{"B-spline basis functions in Bernstein-Bezier form over one knot span", "bbspan"};
  app.require_subcommand(1);
  Options opt;
  const std::vector<std::string> methods = {"new", "deboor", "exact"};
  const std::vector<std::string> formats = {"json", "csv", "text"};

  auto* validate_cmd = app.add_subcommand("validate", "check a knot vector");
  add_knot_options(*validate_cmd, opt.source);

  auto* convert_cmd = app.add_subcommand("convert", "Bernstein coefficients of all functions on one span");
  add_knot_options(*convert_cmd, opt.source);
  auto* span_opt = convert_cmd->add_option("--span", opt.span, "span index j");
  auto* at_opt = convert_cmd->add_option("--at", opt.at, "pick the span containing u");
  span_opt->excludes(at_opt);
  convert_cmd->add_option("--method", opt.method, "new | deboor | exact")->check(CLI::IsMember(methods));
  convert_cmd->add_option("--format", opt.format, "json | csv | text")->check(CLI::IsMember(formats));
  convert_cmd->add_option("--out", opt.out_path, "write to a file instead of stdout");

  auto* eval_cmd = app.add_subcommand("eval", "evaluate N_{m,i}(u) through its Bernstein form");
  add_knot_options(*eval_cmd, opt.source);
  eval_cmd->add_option("-i,--function", opt.function, "basis function index")->required();
  eval_cmd->add_option("--at", opt.at, "parameter u")->required();
  eval_cmd->add_option("--method", opt.method, "new | deboor | exact")->check(CLI::IsMember(methods));

  auto* verify_cmd = app.add_subcommand("verify", "run the invariant checks on every non-empty span");
  add_knot_options(*verify_cmd, opt.source);
  verify_cmd->add_option("--samples", opt.samples, "reconstruction points per span")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", opt.seed, "seed for the sample points");

  auto* bench_cmd = app.add_subcommand("bench", "timing study of the two float methods");
  auto* accuracy_cmd = app.add_subcommand("accuracy", "correct-digit study against exact arithmetic");
  for (auto* cmd : {bench_cmd, accuracy_cmd}) {
    cmd->add_option("--ms", opt.ms, "degrees, comma separated")->delimiter(',')->required();
    cmd->add_option("--ns", opt.ns, "span counts, comma separated")->delimiter(',')->required();
    cmd->add_option("--seed", opt.seed, "base seed");
    cmd->add_option("--format", opt.format, "text | csv")->check(CLI::IsMember({"text", "csv"}));
    cmd->add_option("--out", opt.out_path, "also write <prefix>.csv and <prefix>.txt");
  }
  bench_cmd->add_option("--trials", opt.bench_trials, "knot vectors per cell");
  bench_cmd->add_option("--reps", opt.repetitions, "timed repetitions (median is reported)");
  accuracy_cmd->add_option("--trials", opt.accuracy_trials, "knot vectors per cell");
  accuracy_cmd->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalid;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(opt, out);
    if (convert_cmd->parsed()) return cmd_convert(opt, out);
    if (eval_cmd->parsed()) return cmd_eval(opt, out);
    if (verify_cmd->parsed()) return cmd_verify(opt, out, hooks);
    return cmd_experiment(opt, bench_cmd->parsed(), out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::EmptySpan ? kExitEmptySpan : kExitInvalid;
  }
}

}  // namespace bbspan
