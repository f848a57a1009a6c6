// logchol: experiment driver for the Log-Cholesky SPD geometry library.
//
//   logchol interpolate     geodesic interpolation, determinant sequence, glyphs
//   logchol mean            Frechet mean of a fixture list and its determinant
//   logchol bench-transport parallel transport timings
//   logchol stability       exp/log round trips on ill-conditioned inputs
//   logchol mean-gap        Log-Cholesky vs affine-invariant mean difference
//
// Exit codes: 0 success, 2 usage error, 3 numerical failure.

#include "logchol/errors.hpp"
#include "logchol/experiments.hpp"
#include "logchol/matrix_io.hpp"
#include "logchol/random.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

constexpr int kUsage = 2;
constexpr int kNumerical = 3;

struct Options {
  std::string metric = "log-cholesky";
  std::size_t m = 3;
  int steps = 11;
  int reps = 1000;
  int trials = 100;
  std::size_t n = 20;
  double kappa = 1e10;
  std::uint64_t seed = 1;
  std::string input;
  std::string out;
  std::string format = "json";
  std::string fixture = "interpolation";
  double epsilon = 0.1;
  std::string glyphs;
};

void emit(const logchol::ExperimentReport& report, const Options& opt) {
  std::string text = opt.format == "csv" ? logchol::to_csv(report)
                                         : logchol::to_json(report).dump(2) + "\n";
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out);
  if (!f) throw logchol::InvalidValue("cannot write '" + opt.out + "'");
  f << text;
}

void emit_glyphs(const std::vector<logchol::GlyphRecord>& glyphs, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw logchol::InvalidValue("cannot write '" + path + "'");
  for (const auto& g : glyphs) f << logchol::to_json(g).dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Log-Cholesky SPD geometry experiments"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", opt.seed, "Random seed");
    sub->add_option("--out", opt.out, "Report path (default stdout)");
    sub->add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  };

  auto* interp = app.add_subcommand("interpolate", "Geodesic interpolation between two SPD matrices");
  interp->add_option("--metric", opt.metric, "Metric selector");
  interp->add_option("--steps", opt.steps, "Number of points including endpoints")->check(CLI::Range(2, 1000000));
  interp->add_option("--input", opt.input, "Fixture file with exactly two SPD matrices");
  interp->add_option("--fixture", opt.fixture, "Built-in endpoints when --input is absent")
      ->check(CLI::IsMember({"interpolation", "swelling"}));
  interp->add_option("--epsilon", opt.epsilon, "Epsilon of the swelling fixture");
  interp->add_option("--glyphs", opt.glyphs, "Write glyph records (JSON lines) to this path");
  common(interp);

  auto* mean = app.add_subcommand("mean", "Frechet mean and determinant identities");
  mean->add_option("--metric", opt.metric, "Metric selector");
  mean->add_option("--input", opt.input, "Fixture file of SPD matrices");
  mean->add_option("--n", opt.n, "Random inputs when --input is absent")->check(CLI::PositiveNumber);
  mean->add_option("--m", opt.m, "Dimension of random inputs")->check(CLI::PositiveNumber);
  common(mean);

  auto* bench = app.add_subcommand("bench-transport", "Parallel transport timings");
  bench->add_option("--m", opt.m, "Matrix dimension")->capture_default_str();
  bench->add_option("--reps", opt.reps, "Transports per metric (>= 100)");
  common(bench);

  auto* stab = app.add_subcommand("stability", "Round trips on ill-conditioned matrices");
  stab->add_option("--kappa", opt.kappa, "Condition number");
  stab->add_option("--m", opt.m, "Matrix dimension")->check(CLI::PositiveNumber);
  common(stab);

  auto* gap = app.add_subcommand("mean-gap", "Log-Cholesky vs affine-invariant mean gap");
  gap->add_option("--n", opt.n, "Matrices per trial")->check(CLI::PositiveNumber);
  gap->add_option("--m", opt.m, "Matrix dimension")->check(CLI::PositiveNumber);
  gap->add_option("--trials", opt.trials, "Number of trials")->check(CLI::PositiveNumber);
  common(gap);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (interp->parsed()) {
      const logchol::Metric metric = logchol::parse_metric(opt.metric);
      logchol::Endpoints ends = logchol::interpolation_fixture();
      if (!opt.input.empty()) {
        auto ps = logchol::read_spd_file(opt.input);
        if (ps.size() != 2) throw logchol::InvalidValue("interpolate: --input must hold two matrices");
        ends = {ps[0], ps[1], "file " + opt.input};
      } else if (opt.fixture == "swelling") {
        ends = logchol::swelling_fixture(opt.epsilon);
      }
      auto run = logchol::run_interpolate(ends, metric, opt.steps);
      run.report.seed = opt.seed;
      emit(run.report, opt);
      if (!opt.glyphs.empty()) emit_glyphs(run.glyphs, opt.glyphs);
    } else if (mean->parsed()) {
      const logchol::Metric metric = logchol::parse_metric(opt.metric);
      std::vector<logchol::SpdMatrix> ps;
      std::string description;
      if (!opt.input.empty()) {
        ps = logchol::read_spd_file(opt.input);
        description = "file " + opt.input;
      } else {
        logchol::Rng rng(opt.seed);
        for (std::size_t k = 0; k < opt.n; ++k) ps.push_back(logchol::random_spd(opt.m, rng));
        description = std::to_string(opt.n) + " random matrices, A A^T + 1e-3 I";
      }
      emit(logchol::run_mean(ps, metric, description, opt.seed), opt);
    } else if (bench->parsed()) {
      logchol::BenchOptions b;
      b.m = opt.m;
      b.reps = opt.reps;
      b.seed = opt.seed;
      emit(logchol::run_bench_transport(b), opt);
    } else if (stab->parsed()) {
      emit(logchol::run_stability(opt.kappa, opt.m, opt.seed), opt);
    } else if (gap->parsed()) {
      emit(logchol::run_mean_gap(opt.n, opt.m, opt.trials, opt.seed), opt);
    }
  } catch (const logchol::NotSpd& e) {
    std::cerr << "logchol: " << e.what() << '\n';
    return kNumerical;
  } catch (const logchol::EigFailure& e) {
    std::cerr << "logchol: " << e.what() << '\n';
    return kNumerical;
  } catch (const logchol::NoConvergence& e) {
    std::cerr << "logchol: " << e.what() << '\n';
    return kNumerical;
  } catch (const logchol::DomainError& e) {
    std::cerr << "logchol: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::exception& e) {
    std::cerr << "logchol: " << e.what() << '\n';
    return kUsage;
  }
  return 0;
}
