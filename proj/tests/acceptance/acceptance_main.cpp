// Acceptance checks for the library and the logchol CLI. Prints one
// PASS/FAIL line per criterion and exits non-zero if any fails.
//
//   logchol_acceptance <path-to-logchol-cli>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "logchol/baselines.hpp"
#include "logchol/chol_manifold.hpp"
#include "logchol/chol_map.hpp"
#include "logchol/experiments.hpp"
#include "logchol/geometry.hpp"
#include "logchol/random.hpp"
#include "logchol/report.hpp"
#include "logchol/spd_manifold.hpp"
#include "../test_support.hpp"

namespace {

using namespace logchol;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(4);
  s << v;
  return s.str();
}

double rel(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return (a - b).norm() / b.norm();
}

Outcome swelling_counterexample() {
  const double eps = 0.1;
  const auto t0 = Clock::now();
  const auto ends = swelling_fixture(eps);
  const double mid = det(cholesky_dist::interpolate(ends.p, ends.q, 0.5));
  const double elapsed = seconds_since(t0);
  const double expected = std::pow(1 + eps, 4) / 16;
  const double endpoint_max = std::max(det(ends.p), det(ends.q));
  Outcome o;
  o.pass = std::abs(mid - expected) <= 1e-12 && mid > endpoint_max && elapsed < 1e-3;
  o.detail = "midpoint det " + fmt(mid) + " (expected 0.09150625), endpoint max " +
             fmt(endpoint_max) + ", " + fmt(elapsed * 1e6) + " us";
  return o;
}

Outcome determinant_sequence() {
  const std::array<double, 11> target{5.40, 5.50, 5.60, 5.70, 5.80, 5.91,
                                       6.01, 6.12, 6.23, 6.34, 6.46};
  const auto ends = interpolation_fixture();
  Outcome o;
  double worst = 0.0;
  for (Metric m : {Metric::LogCholesky, Metric::LogEuclidean, Metric::AffineInvariant}) {
    const auto dets = run_interpolate(ends, m, 11).report.sequence("det");
    for (std::size_t k = 0; k < target.size(); ++k)
      worst = std::max(worst, std::abs(dets[k] - target[k]));
  }
  const auto eu = run_interpolate(ends, Metric::Euclidean, 11).report.sequence("det");
  const bool swells = eu[5] > std::max(eu.front(), eu.back());
  o.pass = worst <= 0.005 && swells;
  o.detail = "max |det - target| " + fmt(worst) + " over LC/LE/AI; Euclidean midpoint det " +
             fmt(eu[5]) + " vs endpoints " + fmt(eu.front()) + ", " + fmt(eu.back());
  return o;
}

Outcome determinant_law() {
  Rng rng(20250301);
  std::uniform_int_distribution<int> nd(1, 50), md(1, 10);
  double worst_gap = 0.0, worst_slack = 0.0;
  for (int set = 0; set < 1000; ++set) {
    const int n = nd(rng);
    const auto m = static_cast<std::size_t>(md(rng));
    std::vector<SpdMatrix> ps;
    double log_sum = 0.0, lo = INFINITY, hi = 0.0;
    for (int i = 0; i < n; ++i) {
      ps.push_back(random_spd(m, rng));
      const double d = det(ps.back());
      log_sum += std::log(d);
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
    const double geo = std::exp(log_sum / n);
    const double d = det(log_cholesky_mean(ps));
    worst_gap = std::max(worst_gap, std::abs(d - geo) / geo);
    worst_slack = std::min({worst_slack, (d - lo) / lo, (hi - d) / hi});
  }
  Outcome o;
  o.pass = worst_gap <= 1e-10 && worst_slack >= -1e-12;
  o.detail = "max relative det gap " + fmt(worst_gap) + ", min bound slack " + fmt(worst_slack) +
             " over 1000 sets";
  return o;
}

Outcome mean_optimality() {
  Rng rng(77);
  const auto t0 = Clock::now();
  double worst = 0.0;
  int max_iterations = 0;
  for (int inst = 0; inst < 100; ++inst) {
    const std::size_t m = 1 + static_cast<std::size_t>(inst % 5);
    const int n = 1 + inst % 10;
    std::vector<SpdMatrix> ps;
    for (int i = 0; i < n; ++i) ps.push_back(random_spd(m, rng));
    const auto gd = test::gradient_descent_mean(ps);
    worst = std::max(worst, dist_spd(log_cholesky_mean(ps), gd.point));
    max_iterations = std::max(max_iterations, gd.iterations);
  }
  const double elapsed = seconds_since(t0);
  Outcome o;
  o.pass = worst <= 1e-8 && elapsed < 10.0;
  o.detail = "max dist to gradient-descent optimum " + fmt(worst) + " (" +
             std::to_string(max_iterations) + " iterations max), " + fmt(elapsed) + " s";
  return o;
}

Outcome structure_suite() {
  const auto t0 = Clock::now();
  const std::array<std::size_t, 4> dims{2, 3, 5, 10};
  const int per_dim = 125;
  double exp_log = 0.0, speed = 0.0, axioms = 0.0, invariance = 0.0, transport = 0.0,
         holonomy = 0.0;
  int cases = 0;
  Rng rng(4242);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (std::size_t m : dims) {
    for (int k = 0; k < per_dim; ++k, ++cases) {
      const auto l = random_factor(m, rng);
      const auto kk = random_factor(m, rng);
      const auto r = random_factor(m, rng);
      const auto x = random_lower(m, rng, 0.5);
      const auto y = random_lower(m, rng, 0.5);
      const auto p = random_spd(m, rng, 1.0);
      const auto q = random_spd(m, rng, 1.0);
      const auto s = random_spd(m, rng, 1.0);
      const auto w = random_sym(m, rng);
      const auto v = random_sym(m, rng);

      exp_log = std::max({exp_log, rel(exp_chol(l, log_chol(l, kk)).to_dense(), kk.to_dense()),
                          rel(log_chol(l, exp_chol(l, x)).to_dense(), x.to_dense()),
                          rel(exp_spd(p, log_spd(p, q)).to_dense(), q.to_dense())});

      const double a = u(rng), b = u(rng);
      const double d = dist_chol(geodesic_chol(l, x, a), geodesic_chol(l, x, b));
      const double expected = std::abs(b - a) * std::sqrt(metric_chol(l, x, x));
      speed = std::max(speed, std::abs(d - expected) / std::max(expected, 1e-300));

      const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(m),
                                                           static_cast<Eigen::Index>(m));
      axioms = std::max({axioms,
                         rel(group_op(group_op(l, kk), r).to_dense(),
                             group_op(l, group_op(kk, r)).to_dense()),
                         rel(group_op(l, kk).to_dense(), group_op(kk, l).to_dense()),
                         rel(group_op(l, CholeskyFactor::identity(m)).to_dense(), l.to_dense()),
                         rel(group_op(l, group_inv(l)).to_dense(), id)});

      const double dlk = dist_chol(l, kk);
      const double dpq = dist_spd(p, q);
      invariance = std::max({invariance, std::abs(dist_chol(group_op(r, l), group_op(r, kk)) - dlk) / dlk,
                             std::abs(dist_spd(group_op_spd(s, p), group_op_spd(s, q)) - dpq) / dpq});

      const double g0 = metric_chol(l, x, y);
      const double g1 = metric_chol(kk, transport_chol(l, kk, x), transport_chol(l, kk, y));
      const double h0 = metric_spd(p, w, v);
      const double h1 = metric_spd(q, transport_spd(p, q, w), transport_spd(p, q, v));
      transport = std::max({transport, std::abs(g1 - g0) / std::max(1.0, std::abs(g0)),
                            std::abs(h1 - h0) / std::max(1.0, std::abs(h0))});

      const auto tw = transport_spd(p, q, w);
      holonomy = std::max(
          {holonomy,
           rel(transport_chol(kk, r, transport_chol(l, kk, x)).to_dense(),
               transport_chol(l, r, x).to_dense()),
           rel(transport_chol(kk, l, transport_chol(l, kk, x)).to_dense(), x.to_dense()),
           rel(transport_spd(q, s, tw).to_dense(), transport_spd(p, s, w).to_dense()),
           rel(transport_spd(q, p, tw).to_dense(), w.to_dense())});
    }
  }
  const double elapsed = seconds_since(t0);
  Outcome o;
  o.pass = exp_log <= 1e-12 && speed <= 1e-10 && axioms <= 1e-12 && invariance <= 1e-12 &&
           transport <= 1e-12 && holonomy <= 1e-12 && cases >= 500 && elapsed < 30.0;
  o.detail = std::to_string(cases) + " cases per property: exp/log " + fmt(exp_log) +
             ", constant speed " + fmt(speed) + ", group axioms " + fmt(axioms) +
             ", bi-invariance " + fmt(invariance) + ", transport isometry " + fmt(transport) +
             ", holonomy " + fmt(holonomy) + ", " + fmt(elapsed) + " s";
  return o;
}

Outcome differential() {
  Rng rng(606);
  const double h = 1e-6;
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const std::size_t m = 2 + static_cast<std::size_t>(k % 9);
    const auto l = random_factor(m, rng);
    const auto x = random_lower(m, rng);
    const Eigen::MatrixXd fd =
        (gram(l.lower() + h * x).to_dense() - gram(l.lower() - h * x).to_dense()) / (2 * h);
    worst = std::max(worst, rel(diff_S(l, x).to_dense(), fd));
  }
  Outcome o;
  o.pass = worst <= 1e-6;
  o.detail = "max relative gap to central difference " + fmt(worst) + " over 100 cases";
  return o;
}

Outcome timing_ordering() {
  BenchOptions opts;
  opts.m = 5;
  opts.reps = 1000;
  opts.series_tol = 1e-12;
  const auto r = run_bench_transport(opts);
  const double lc = r.scalar("time_ns.log-cholesky");
  const double ai = r.scalar("time_ns.affine-invariant");
  const double le = r.scalar("time_ns.log-euclidean");
  Outcome o;
  o.pass = lc < ai && ai < le && le / lc > 5 && ai / lc > 1;
  o.detail = "LC " + fmt(lc) + " ns, AI " + fmt(ai) + " ns, LE " + fmt(le) + " ns; LE/LC " +
             fmt(le / lc) + ", AI/LC " + fmt(ai / lc) + ", LE series mean terms " +
             fmt(r.scalar("le_series.mean_terms"));
  return o;
}

std::string le_outcome(const ExperimentReport& r) {
  if (const auto* err = r.find("log-euclidean.roundtrip_rel_error")) return fmt(err->value);
  if (const auto* f = r.find("log-euclidean.roundtrip_failure")) return "failed (" + f->text + ")";
  return "not run";
}

Outcome stability() {
  const auto r10 = run_stability(1e10, 3, 31);
  const auto r15 = run_stability(1e15, 3, 31);
  Outcome o;
  const auto* lc10 = r10.find("log-cholesky.roundtrip_rel_error");
  const auto* lc15 = r15.find("log-cholesky.roundtrip_rel_error");
  o.pass = lc10 && lc15 && lc10->value < 1e-6 && lc15->value < 1e-2;
  o.detail = "kappa 1e10: LC " + (lc10 ? fmt(lc10->value) : "failed") + ", LE " + le_outcome(r10) +
             "; kappa 1e15: LC " + (lc15 ? fmt(lc15->value) : "failed") + ", LE " +
             le_outcome(r15);
  return o;
}

Outcome mean_gap() {
  const auto r = run_mean_gap(20, 3, 100, 1);
  const double g = r.scalar("gap_lc_ai.mean");
  Outcome o;
  o.pass = g >= 0.005 && g <= 0.2;
  o.detail = "mean relative squared gap LC vs AI " + fmt(g) + " (band [0.005, 0.2]), sampling " +
             r.inputs + ", affine failures " + fmt(r.scalar("affine_failures"));
  return o;
}

std::string run_command(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  status = pclose(pipe);
  return out;
}

Outcome cli_determinism(const std::string& cli) {
  Outcome o;
  if (cli.empty()) {
    o.pass = false;
    o.detail = "no CLI path given";
    return o;
  }
  const std::vector<std::string> commands{
      "interpolate --metric log-cholesky --steps 11 --seed 5",
      "mean --metric affine-invariant --n 12 --m 4 --seed 5",
      "bench-transport --m 5 --reps 200 --seed 5",
      "stability --kappa 1e10 --m 5 --seed 5",
      "mean-gap --n 20 --m 3 --trials 10 --seed 5"};
  int checked = 0;
  for (const auto& args : commands) {
    const std::string cmd = "'" + cli + "' " + args + " 2>/dev/null";
    int s1 = 0, s2 = 0;
    const std::string a = run_command(cmd, s1);
    const std::string b = run_command(cmd, s2);
    try {
      const std::string ja = without_timing(nlohmann::json::parse(a)).dump();
      const std::string jb = without_timing(nlohmann::json::parse(b)).dump();
      if (s1 != 0 || s2 != 0 || ja != jb) {
        o.pass = false;
        o.detail += "differs: " + args + "; ";
      }
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail += "bad output from " + args + ": " + e.what() + "; ";
    }
    ++checked;
  }
  if (o.pass) o.detail = std::to_string(checked) + " commands, non-timing fields byte-identical";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"swelling counterexample", swelling_counterexample},
      {"interpolation determinant sequence", determinant_sequence},
      {"mean determinant law", determinant_law},
      {"mean optimality", mean_optimality},
      {"isometry and structure suite", structure_suite},
      {"differential of L L^T", differential},
      {"transport timing ordering", timing_ordering},
      {"ill-conditioned stability", stability},
      {"mean gap statistic", mean_gap},
      {"CLI determinism", [&] { return cli_determinism(cli); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << " " << criteria[i].first
              << ": " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
