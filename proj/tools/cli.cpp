#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <ostream>

#include "qubitfit/analytic.hpp"
#include "qubitfit/chemotaxis.hpp"
#include "qubitfit/experiments.hpp"
#include "qubitfit/numeric_text.hpp"
#include "qubitfit/objective.hpp"
#include "qubitfit/params_io.hpp"
#include "qubitfit/run_record.hpp"
#include "qubitfit/verification.hpp"

#ifndef QUBITFIT_DATA_DIR
#define QUBITFIT_DATA_DIR "data/paper"
#endif

namespace qubitfit::cli {

namespace fs = std::filesystem;

namespace {

constexpr const char* kConfigFile = "qubitfit.conf";
constexpr const char* kSeedEnv = "QUBITFIT_SEED";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Settings {
  std::string target;
  std::size_t n = kPaperSamples;
  double x0 = kPaperHalfWidth;
  std::size_t iterations = kPaperIterations;
  std::size_t restarts = kDefaultRestarts;
  std::uint64_t seed = 42;
  double sigma0 = 0.3;
  double sigma_shrink = 0.7;
  std::size_t fail_streak = 50;
  std::size_t threads = 0;
  std::string out_dir = ".";
  std::string data_dir = QUBITFIT_DATA_DIR;
  std::string params;
  std::string init;
  std::string out = "run.csv";
  std::size_t trials = 1000;
};

template <typename Int>
Int parse_unsigned(std::string_view text, std::string_view what) {
  const std::string_view s = trim(text);
  Int v{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw UsageError(std::string(what) + ": expected a non-negative integer, got '" +
                     std::string(s) + "'");
  return v;
}

// Applies one config-file entry. Keys mirror the long flag names with '_'
// in place of '-'.
void apply_setting(Settings& s, const std::string& key, const std::string& value) {
  try {
    if (key == "target") s.target = value;
    else if (key == "n") s.n = parse_unsigned<std::size_t>(value, key);
    else if (key == "x0") s.x0 = parse_double(value);
    else if (key == "iterations") s.iterations = parse_unsigned<std::size_t>(value, key);
    else if (key == "restarts") s.restarts = parse_unsigned<std::size_t>(value, key);
    else if (key == "seed") s.seed = parse_unsigned<std::uint64_t>(value, key);
    else if (key == "sigma0") s.sigma0 = parse_double(value);
    else if (key == "sigma_shrink") s.sigma_shrink = parse_double(value);
    else if (key == "fail_streak") s.fail_streak = parse_unsigned<std::size_t>(value, key);
    else if (key == "threads") s.threads = parse_unsigned<std::size_t>(value, key);
    else if (key == "out_dir") s.out_dir = value;
    else if (key == "data_dir") s.data_dir = value;
    else if (key == "trials") s.trials = parse_unsigned<std::size_t>(value, key);
    else throw ParseError("unknown config key '" + key + "'");
  } catch (const std::invalid_argument& e) {
    throw ParseError(key + ": " + e.what());
  }
}

std::string flag_for(const std::string& key) {
  std::string f = "--" + key;
  std::replace(f.begin(), f.end(), '_', '-');
  return f;
}

bool flag_given(const CLI::App& sub, const std::string& key) {
  const CLI::Option* opt = sub.get_option_no_throw(flag_for(key));
  return opt != nullptr && opt->count() > 0;
}

// Precedence: flag > config file > built-in default. For the seed,
// QUBITFIT_SEED sits between the flag and the config file.
void merge_sources(Settings& s, const CLI::App& sub, const std::string& config_path) {
  std::string path = config_path;
  if (path.empty() && fs::exists(kConfigFile)) path = kConfigFile;
  if (!path.empty()) {
    for (const auto& kv : parse_key_values(read_text_file(path))) {
      if (!flag_given(sub, kv.key)) apply_setting(s, kv.key, kv.value);
    }
  }
  if (!flag_given(sub, "seed")) {
    if (const char* env = std::getenv(kSeedEnv); env != nullptr && *env != '\0')
      s.seed = parse_unsigned<std::uint64_t>(env, kSeedEnv);
  }
}

fs::path ensure_dir(const std::string& dir) {
  fs::path p(dir);
  std::error_code ec;
  fs::create_directories(p, ec);
  if (ec || !fs::is_directory(p))
    throw std::runtime_error("cannot create output directory '" + dir + "'");
  return p;
}

int cmd_fit(const Settings& s, std::ostream& out) {
  if (s.target.empty()) throw UsageError("fit: --target is required");
  const TargetFunction t = TargetFunction::parse(s.target);
  const SampleGrid grid = make_grid(s.n, s.x0);

  OptimizerConfig cfg;
  cfg.iterations = s.iterations;
  cfg.restarts = s.restarts;
  cfg.seed = s.seed;
  cfg.sigma0 = s.sigma0;
  cfg.sigma_shrink = s.sigma_shrink;
  cfg.fail_streak = s.fail_streak;
  cfg.threads = s.threads;
  if (!s.init.empty()) cfg.init = read_params_file(s.init);

  const FitResult fit = optimize(t, grid, cfg);
  const std::string summary =
      summary_text({t.name(), grid.size(), s.x0, fit.j_final, fit.epsilon, fit.evals, s.seed});

  const fs::path dir = ensure_dir(s.out_dir);
  write_params_file(dir / "best.params", fit.best);
  write_text_file(dir / "run.csv", run_csv(tabulate(fit.best, t, grid)));
  write_text_file(dir / "trace.csv", trace_csv(fit.j_trace));
  write_text_file(dir / "plot.svg", fit_plot_svg(t, fit.best, s.x0, "Fit of " + t.name()));
  write_text_file(dir / "summary.txt", summary);
  out << summary;
  return kOk;
}

int cmd_eval(const Settings& s, std::ostream& out) {
  if (s.target.empty()) throw UsageError("eval: --target is required");
  const CircuitParams p = read_params_file(s.params);
  const TargetFunction t = TargetFunction::parse(s.target);
  const SampleGrid grid = make_grid(s.n, s.x0);
  const double j = performance_index(p, t, grid);
  const double eps = max_pointwise_error(p, t, grid);
  if (!s.out.empty()) {
    const fs::path csv(s.out);
    if (csv.has_parent_path()) ensure_dir(csv.parent_path().string());
    write_text_file(csv, run_csv(tabulate(p, t, grid)));
  }
  out << "J: " << format_double(j) << '\n' << "epsilon: " << format_double(eps) << '\n';
  return kOk;
}

int cmd_coeffs(const Settings& s, std::ostream& out) {
  const CubicPoly c = cubic_coefficients(read_params_file(s.params));
  for (int k = 0; k <= 3; ++k)
    out << 'a' << k << ": " << format_double(c.coefficient(k)) << '\n';
  return kOk;
}

int cmd_verify(const Settings& s, std::ostream& out) {
  if (s.trials == 0) throw UsageError("verify: --trials must be >= 1");
  bool ok = true;
  for (const auto& r : run_verification(s.trials, s.seed)) {
    ok = ok && r.passed;
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.trials
        << " trials, worst " << format_double(r.worst) << ')';
    if (r.failing_seed) out << " first failing draw seed " << *r.failing_seed;
    out << '\n';
  }
  return ok ? kOk : kFailed;
}

int cmd_reproduce(const Settings& s, std::ostream& out) {
  ReproductionOptions opt;
  opt.data_dir = s.data_dir;
  opt.seed = s.seed;
  opt.restarts = s.restarts;
  opt.iterations = s.iterations;
  opt.threads = s.threads;
  const ReproductionReport report = run_reproduction(opt);

  const fs::path dir = ensure_dir(s.out_dir);
  const std::string table = markdown_table(report);
  std::string md = "# Reproduction (N = " + std::to_string(kPaperSamples) +
                   ", x0 = " + format_double(kPaperHalfWidth) +
                   ", iterations = " + std::to_string(s.iterations) +
                   ", restarts = " + std::to_string(s.restarts) +
                   ", seed = " + std::to_string(s.seed) + ")\n\n" + table;
  write_text_file(dir / "reproduce.md", md);
  for (const auto& row : report.rows) {
    if (row.source != "retrained") continue;
    const TargetFunction t = TargetFunction::parse(row.target);
    write_params_file(dir / (row.target + ".params"), row.params);
    write_text_file(dir / (row.target + ".svg"),
                    fit_plot_svg(t, row.params, kPaperHalfWidth,
                                 t.name() + ", retrained, J = " + format_double(row.j)));
  }
  out << table;
  return report.all_passed() ? kOk : kFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-qubit circuit function approximation", "qubitfit"};
  app.require_subcommand(1);

  Settings s;
  std::string config_path;
  app.add_option("--config", config_path, "key=value settings file (default ./qubitfit.conf)");

  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--target", s.target, "quadratic | gaussian | sigmoid | poly:c0,c1,...");
    sub->add_option("--n", s.n, "number of samples");
    sub->add_option("--x0", s.x0, "half-width of the sample interval");
  };

  CLI::App* fit = app.add_subcommand("fit", "train the circuit on a target function");
  add_grid(fit);
  fit->add_option("--iterations", s.iterations, "objective evaluations per restart");
  fit->add_option("--restarts", s.restarts, "independent restarts");
  fit->add_option("--seed", s.seed, "master seed");
  fit->add_option("--sigma0", s.sigma0, "initial step scale");
  fit->add_option("--sigma-shrink", s.sigma_shrink, "step decay factor");
  fit->add_option("--fail-streak", s.fail_streak, "rejections before decay");
  fit->add_option("--threads", s.threads, "worker threads (0 = all cores)");
  fit->add_option("--init", s.init, "parameter file used as starting point");
  fit->add_option("--out-dir", s.out_dir, "output directory");

  CLI::App* eval = app.add_subcommand("eval", "evaluate J for a parameter file");
  eval->add_option("--params", s.params, "parameter file")->required();
  add_grid(eval);
  eval->add_option("--out", s.out, "CSV output path");

  CLI::App* coeffs = app.add_subcommand("coeffs", "print the cubic Maclaurin coefficients");
  coeffs->add_option("--params", s.params, "parameter file")->required();

  CLI::App* verify = app.add_subcommand("verify", "run randomized self-checks");
  verify->add_option("--trials", s.trials, "random draws per suite");
  verify->add_option("--seed", s.seed, "master seed");

  CLI::App* reproduce = app.add_subcommand("reproduce", "rerun the three published experiments");
  reproduce->add_option("--out-dir", s.out_dir, "output directory");
  reproduce->add_option("--seed", s.seed, "master seed");
  reproduce->add_option("--data-dir", s.data_dir, "directory with the published parameter files");
  reproduce->add_option("--restarts", s.restarts, "independent restarts");
  reproduce->add_option("--iterations", s.iterations, "objective evaluations per restart");
  reproduce->add_option("--threads", s.threads, "worker threads (0 = all cores)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("qubitfit");

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    merge_sources(s, *sub, config_path);
    if (sub == fit) return cmd_fit(s, out);
    if (sub == eval) return cmd_eval(s, out);
    if (sub == coeffs) return cmd_coeffs(s, out);
    if (sub == verify) return cmd_verify(s, out);
    return cmd_reproduce(s, out);
  } catch (const std::exception& e) {
    err << "qubitfit: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace qubitfit::cli
