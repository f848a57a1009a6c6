#include "logchol/experiments.hpp"

#include "logchol/baselines.hpp"
#include "logchol/chol_map.hpp"
#include "logchol/errors.hpp"
#include "logchol/random.hpp"
#include "logchol/spd_manifold.hpp"

#include <Eigen/Geometry>
#include <Eigen/LU>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>

namespace logchol {
namespace {

constexpr const char* kRandomLaw = "A A^T + 1e-3 I, A with iid standard normal entries";

Eigen::Matrix3d rotation(double yaw, double pitch, double roll) {
  return (Eigen::AngleAxisd(yaw, Eigen::Vector3d::UnitZ()) *
          Eigen::AngleAxisd(pitch, Eigen::Vector3d::UnitY()) *
          Eigen::AngleAxisd(roll, Eigen::Vector3d::UnitX()))
      .toRotationMatrix();
}

SpdMatrix rotated_diagonal(const Eigen::Matrix3d& r, const Eigen::Vector3d& d) {
  const Eigen::MatrixXd p = r * d.asDiagonal() * r.transpose();
  return SpdMatrix(SymMatrix::symmetrize(p));
}

std::vector<double> row_major(const SymMatrix& s) {
  std::vector<double> out;
  out.reserve(s.dim() * s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    for (std::size_t j = 0; j < s.dim(); ++j) out.push_back(s(i, j));
  }
  return out;
}

double geometric_mean_det(std::span<const SpdMatrix> ps) {
  double s = 0.0;
  for (const auto& p : ps) s += log_det(p);
  return std::exp(s / static_cast<double>(ps.size()));
}

bool has_det_law(Metric m) {
  return m == Metric::LogCholesky || m == Metric::LogEuclidean || m == Metric::AffineInvariant;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double relative_gap(const SymMatrix& a, const SymMatrix& b) {
  return frobenius_norm(a - b) / frobenius_norm(b);
}

}  // namespace

Endpoints interpolation_fixture() {
  return {rotated_diagonal(rotation(0.3, 0.5, 0.2),
                           Eigen::Vector3d(6.0, 1.5, kFixtureDetP / 9.0)),
          rotated_diagonal(rotation(1.9, -0.7, 1.1),
                           Eigen::Vector3d(0.95, kFixtureDetQ / 1.9, 2.0)),
          "interpolation fixture: R1 diag(6, 1.5, 5.4032/9) R1^T (det 5.4032), "
          "R2 diag(0.95, 6.4573/1.9, 2) R2^T (det 6.4573)"};
}

Endpoints swelling_fixture(double eps) {
  if (!(eps > 0.0)) throw InvalidValue("swelling_fixture: eps must be positive");
  const double e2 = eps * eps;
  const double d1[] = {e2, 1.0};
  const double d2[] = {1.0, e2};
  return {SpdMatrix(SymMatrix::diagonal(d1)), SpdMatrix(SymMatrix::diagonal(d2)),
          "swelling fixture: diag(eps^2, 1), diag(1, eps^2)"};
}

std::vector<double> uniform_grid(int steps) {
  if (steps < 2) throw InvalidValue("steps must be at least 2");
  std::vector<double> ts(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) ts[static_cast<std::size_t>(k)] = static_cast<double>(k) / (steps - 1);
  return ts;
}

std::size_t grid_row(Metric m) {
  switch (m) {
    case Metric::Euclidean: return 0;
    case Metric::Cholesky: return 1;
    case Metric::AffineInvariant: return 2;
    case Metric::LogEuclidean: return 3;
    case Metric::LogCholesky: return 4;
  }
  return 0;
}

double sym_det(const SymMatrix& s) {
  try {
    return det(SpdMatrix(s));
  } catch (const NotSpd&) {
    return s.to_dense().determinant();
  }
}

// ---------------------------------------------------------------------------

InterpolationRun run_interpolate(const Endpoints& ends, Metric metric, int steps) {
  const std::vector<double> ts = uniform_grid(steps);
  InterpolationRun run;
  auto& r = run.report;
  r.experiment = "interpolate";
  r.metrics = {std::string(metric_name(metric))};
  r.inputs = ends.description;
  r.dimension = ends.p.dim();
  r.repetitions = ts.size();
  r.parameters = {{"steps", steps}};

  std::vector<double> dets;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    const SymMatrix s = interpolate(metric, ends.p, ends.q, ts[k]);
    dets.push_back(sym_det(s));
    run.glyphs.push_back(make_glyph(grid_row(metric), k, s));
  }

  const double det_p = det(ends.p);
  const double det_q = det(ends.q);
  r.add_sequence("t", ts, "1", 0.0);
  r.add_sequence("det", dets, "1", has_det_law(metric) ? std::optional(1e-10) : std::nullopt);
  const double endpoint_max = std::max(det_p, det_q);
  const double interior_max =
      dets.size() > 2 ? *std::max_element(dets.begin() + 1, dets.end() - 1) : endpoint_max;
  r.add_scalar("det_endpoint_max", endpoint_max, "1");
  r.add_scalar("det_interior_max", interior_max, "1");
  r.add_flag("swelling", interior_max > endpoint_max * (1.0 + 1e-12));
  if (steps % 2 == 1) r.add_scalar("det_midpoint", dets[ts.size() / 2], "1");
  if (has_det_law(metric)) {
    double worst = 0.0;
    for (std::size_t k = 0; k < ts.size(); ++k) {
      const double expected = std::pow(det_p, 1.0 - ts[k]) * std::pow(det_q, ts[k]);
      worst = std::max(worst, std::abs(dets[k] - expected) / expected);
    }
    r.add_scalar("det_law_max_rel_gap", worst, "1", 1e-10);
  }
  return run;
}

ExperimentReport run_mean(std::span<const SpdMatrix> inputs, Metric metric,
                          const std::string& description, std::uint64_t seed) {
  if (inputs.empty()) throw EmptyInput("mean: no input matrices");
  ExperimentReport r;
  r.experiment = "mean";
  r.metrics = {std::string(metric_name(metric))};
  r.inputs = description;
  r.seed = seed;
  r.dimension = inputs.front().dim();
  r.repetitions = inputs.size();
  r.parameters = {{"n", inputs.size()}};

  SymMatrix m = SymMatrix::identity(inputs.front().dim());
  if (metric == Metric::AffineInvariant) {
    const auto k = affine::karcher_mean_detailed(inputs);
    m = k.mean.sym();
    r.add_scalar("karcher_iterations", k.iterations, "count", 0.0);
    r.add_scalar("karcher_gradient_norm", k.gradient_norm, "1", 1e-12);
  } else {
    m = mean(metric, inputs);
  }
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (const auto& p : inputs) {
    lo = std::min(lo, det(p));
    hi = std::max(hi, det(p));
  }
  const double d = sym_det(m);
  const double geo = geometric_mean_det(inputs);
  r.add_sequence("mean", row_major(m), "1");
  r.add_scalar("det_mean", d, "1");
  r.add_scalar("det_geometric_mean", geo, "1");
  r.add_scalar("det_rel_gap", std::abs(d - geo) / geo, "1",
               has_det_law(metric) ? std::optional(1e-10) : std::nullopt);
  r.add_scalar("det_min", lo, "1");
  r.add_scalar("det_max", hi, "1");
  r.add_flag("det_within_bounds", lo * (1.0 - 1e-12) <= d && d <= hi * (1.0 + 1e-12));
  return r;
}

// ---------------------------------------------------------------------------

ExperimentReport run_bench_transport(const BenchOptions& opts) {
  if (opts.m < 2) throw InvalidValue("bench-transport: m must be at least 2");
  if (opts.reps < 100) throw InvalidValue("bench-transport: reps must be at least 100");
  if (opts.batches < 1 || opts.reps < opts.batches) {
    throw InvalidValue("bench-transport: bad batch count");
  }

  Rng rng(opts.seed);
  std::vector<SymMatrix> ps, qs, ws;
  for (int k = 0; k < opts.reps; ++k) {
    ps.push_back(random_spd(opts.m, rng).sym());
    qs.push_back(random_spd(opts.m, rng).sym());
    ws.push_back(random_sym(opts.m, rng));
  }

  using Transport = std::function<SymMatrix(const SpdMatrix&, const SpdMatrix&, const SymMatrix&)>;
  const std::vector<std::pair<Metric, Transport>> contenders = {
      {Metric::LogCholesky, [](auto& p, auto& q, auto& w) { return transport_spd(p, q, w); }},
      {Metric::AffineInvariant, [](auto& p, auto& q, auto& w) { return affine::transport(p, q, w); }},
      {Metric::LogEuclidean,
       [&](auto& p, auto& q, auto& w) {
         return log_euclid::transport(p, q, w, opts.series_tol, opts.max_series_terms);
       }},
  };

  ExperimentReport r;
  r.experiment = "bench-transport";
  r.inputs = std::string("P, Q: ") + kRandomLaw + "; W: symmetric with iid standard normal entries";
  r.seed = opts.seed;
  r.dimension = opts.m;
  r.repetitions = static_cast<std::size_t>(opts.reps);
  r.parameters = {{"series_tol", opts.series_tol},
                  {"max_series_terms", opts.max_series_terms},
                  {"warmup", opts.warmup},
                  {"batches", opts.batches},
                  {"timing", "median over batches of mean time per transport, steady clock"}};

  volatile double sink = 0.0;
  const int per_batch = opts.reps / opts.batches;
  std::vector<double> means;
  for (const auto& [metric, fn] : contenders) {
    r.metrics.emplace_back(metric_name(metric));
    auto once = [&, &fn = fn](int k) {
      const auto i = static_cast<std::size_t>(k);
      SpdMatrix p(ps[i]);
      SpdMatrix q(qs[i]);
      sink = sink + fn(p, q, ws[i]).diag(0);
    };
    for (int k = 0; k < opts.warmup; ++k) once(k % opts.reps);
    std::vector<double> batch_means;
    for (int b = 0; b < opts.batches; ++b) {
      const auto start = std::chrono::steady_clock::now();
      for (int k = b * per_batch; k < (b + 1) * per_batch; ++k) once(k);
      const auto stop = std::chrono::steady_clock::now();
      const double ns = std::chrono::duration<double, std::nano>(stop - start).count();
      batch_means.push_back(ns / per_batch);
    }
    means.push_back(median(batch_means));
    r.add_scalar("time_ns." + std::string(metric_name(metric)), means.back(), "ns", std::nullopt,
                 true);
  }
  const double lc = means[0], ai = means[1], le = means[2];
  r.add_scalar("ratio.le_over_lc", le / lc, "1", std::nullopt, true);
  r.add_scalar("ratio.ai_over_lc", ai / lc, "1", std::nullopt, true);
  r.add_scalar("ordering.lc_lt_ai_lt_le", (lc < ai && ai < le) ? 1.0 : 0.0, "flag", 0.0, true);

  // Series statistics are deterministic, so they are collected outside the
  // timed region.
  double terms = 0.0;
  int capped = 0;
  for (int k = 0; k < opts.reps; ++k) {
    const auto i = static_cast<std::size_t>(k);
    const auto t = log_euclid::transport_detailed(SpdMatrix(ps[i]), SpdMatrix(qs[i]), ws[i],
                                                  opts.series_tol, opts.max_series_terms);
    terms += t.series_terms;
    if (!t.series_converged) ++capped;
  }
  r.add_scalar("le_series.mean_terms", terms / opts.reps, "count");
  r.add_scalar("le_series.capped", capped, "count", 0.0);
  return r;
}

// ---------------------------------------------------------------------------

ExperimentReport run_stability(double kappa, std::size_t m, std::uint64_t seed) {
  if (!(kappa >= 1.0)) throw InvalidValue("stability: kappa must be >= 1");
  if (m < 1) throw InvalidValue("stability: m must be positive");

  ExperimentReport r;
  r.experiment = "stability";
  r.inputs = "three matrices R diag(1, ..., 1/kappa) R^T, log-spaced spectrum, R Haar orthogonal";
  r.seed = seed;
  r.dimension = m;
  r.repetitions = 1;
  r.parameters = {{"kappa", kappa}};

  Rng rng(seed);
  std::vector<SpdMatrix> set;
  try {
    for (int k = 0; k < 3; ++k) set.push_back(ill_conditioned_spd(m, kappa, rng));
  } catch (const std::exception& e) {
    r.add_flag("inputs_spd", false);
    r.add_text("inputs_failure", e.what());
    return r;
  }
  r.add_flag("inputs_spd", true);
  const SpdMatrix& p = set[0];
  const SpdMatrix& q = set[1];

  const std::optional<double> lc_tol = kappa <= 1.0 ? 1e-12 : kappa <= 1e10 ? 1e-6 : 1e-2;
  for (Metric metric : kAllMetrics) {
    r.metrics.emplace_back(metric_name(metric));
    const std::string name(metric_name(metric));
    const auto tol = metric == Metric::LogCholesky ? lc_tol : std::nullopt;
    try {
      SymMatrix back = q.sym();
      switch (metric) {
        case Metric::Euclidean: back = p.sym() + (q.sym() - p.sym()); break;
        case Metric::Cholesky: {
          const auto& l = p.factor().lower();
          back = gram(l + (q.factor().lower() - l));
          break;
        }
        case Metric::LogEuclidean: back = log_euclid::exp_map(p, log_euclid::log_map(p, q)).sym(); break;
        case Metric::AffineInvariant: back = affine::exp_map(p, affine::log_map(p, q)).sym(); break;
        case Metric::LogCholesky: back = exp_spd(p, log_spd(p, q)).sym(); break;
      }
      const double err = relative_gap(back, q.sym());
      r.add_scalar(name + ".roundtrip_rel_error", err, "1", tol);
      r.add_flag(name + ".roundtrip_ok", std::isfinite(err));
    } catch (const std::exception& e) {
      r.add_flag(name + ".roundtrip_ok", false);
      r.add_text(name + ".roundtrip_failure", e.what());
    }
    try {
      const SymMatrix mm = mean(metric, set);
      const SpdMatrix spd(mm);
      const double geo = geometric_mean_det(set);
      r.add_flag(name + ".mean_ok", true);
      r.add_scalar(name + ".mean_det_rel_gap", std::abs(det(spd) - geo) / geo, "1");
    } catch (const std::exception& e) {
      r.add_flag(name + ".mean_ok", false);
      r.add_text(name + ".mean_failure", e.what());
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

ExperimentReport run_mean_gap(std::size_t n, std::size_t m, int trials, std::uint64_t seed) {
  if (n < 1) throw InvalidValue("mean-gap: n must be positive");
  if (m < 1) throw InvalidValue("mean-gap: m must be positive");
  if (trials < 1) throw InvalidValue("mean-gap: trials must be positive");

  ExperimentReport r;
  r.experiment = "mean-gap";
  r.metrics = {"log-cholesky", "affine-invariant", "log-euclidean"};
  r.inputs = kRandomLaw;
  r.seed = seed;
  r.dimension = m;
  r.repetitions = static_cast<std::size_t>(trials);
  r.parameters = {{"n", n}, {"statistic", "||M_LC - M_X||_F^2 / ||M_X||_F^2"}};

  Rng rng(seed);
  std::vector<double> gaps_ai, gaps_le;
  int failures = 0;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<SpdMatrix> ps;
    for (std::size_t k = 0; k < n; ++k) ps.push_back(random_spd(m, rng));
    const SymMatrix lc = log_cholesky_mean(ps).sym();
    const SymMatrix le = log_euclid::mean(ps).sym();
    const double rle = relative_gap(lc, le);
    gaps_le.push_back(rle * rle);
    try {
      const SymMatrix ai = affine::karcher_mean(ps).sym();
      const double rai = relative_gap(lc, ai);
      gaps_ai.push_back(rai * rai);
    } catch (const std::exception&) {
      ++failures;
    }
  }
  auto average = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return v.empty() ? std::numeric_limits<double>::quiet_NaN() : s / static_cast<double>(v.size());
  };
  r.add_scalar("gap_lc_ai.mean", average(gaps_ai), "1");
  r.add_scalar("gap_lc_le.mean", average(gaps_le), "1");
  r.add_sequence("gap_lc_ai.per_trial", gaps_ai, "1");
  r.add_scalar("affine_failures", failures, "count", 0.0);
  r.add_scalar("trials_used", static_cast<double>(gaps_ai.size()), "count", 0.0);
  return r;
}

}  // namespace logchol
