#include "logchol/baselines.hpp"

#include "logchol/chol_manifold.hpp"
#include "logchol/chol_map.hpp"
#include "logchol/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <vector>

namespace logchol {
namespace {

SpdMatrix to_spd(const Eigen::MatrixXd& a) { return SpdMatrix(SymMatrix::symmetrize(a)); }

void require_nonempty(std::span<const SpdMatrix> ps, const char* what) {
  if (ps.empty()) throw EmptyInput(std::string(what) + ": no points");
  for (const auto& p : ps) require_same_dim(ps.front().dim(), p.dim(), what);
}

}  // namespace

// ---------------------------------------------------------------------------

namespace euclid {

double distance(const SymMatrix& p, const SymMatrix& q) { return frobenius_norm(p - q); }

SymMatrix interpolate(const SymMatrix& p, const SymMatrix& q, double t) {
  if (t == 0.0) return p;
  if (t == 1.0) return q;
  return (1.0 - t) * p + t * q;
}

SymMatrix mean(std::span<const SpdMatrix> ps) {
  require_nonempty(ps, "euclid::mean");
  SymMatrix acc(ps.front().dim());
  for (const auto& p : ps) acc = acc + p.sym();
  return (1.0 / static_cast<double>(ps.size())) * acc;
}

}  // namespace euclid

// ---------------------------------------------------------------------------

namespace cholesky_dist {

double distance(const SpdMatrix& p, const SpdMatrix& q) {
  require_same_dim(p.dim(), q.dim(), "cholesky_dist::distance");
  return frobenius_norm(p.factor().lower() - q.factor().lower());
}

SpdMatrix interpolate(const SpdMatrix& p, const SpdMatrix& q, double t) {
  require_same_dim(p.dim(), q.dim(), "cholesky_dist::interpolate");
  if (t == 0.0) return p;
  if (t == 1.0) return q;
  return reconstruct(CholeskyFactor((1.0 - t) * p.factor().lower() + t * q.factor().lower()));
}

SpdMatrix mean(std::span<const SpdMatrix> ps) {
  require_nonempty(ps, "cholesky_dist::mean");
  LowerTriangular acc(ps.front().dim());
  for (const auto& p : ps) acc = acc + p.factor().lower();
  return reconstruct(CholeskyFactor((1.0 / static_cast<double>(ps.size())) * acc));
}

SymMatrix transport(const SpdMatrix& p, const SpdMatrix& q, const SymMatrix& w) {
  return diff_S(q.factor(), diff_S_inv(p.factor(), w));
}

}  // namespace cholesky_dist

// ---------------------------------------------------------------------------

namespace log_euclid {

double distance(const SpdMatrix& p, const SpdMatrix& q) {
  require_same_dim(p.dim(), q.dim(), "log_euclid::distance");
  return (sym_log(p.to_dense()) - sym_log(q.to_dense())).norm();
}

SpdMatrix interpolate(const SpdMatrix& p, const SpdMatrix& q, double t) {
  require_same_dim(p.dim(), q.dim(), "log_euclid::interpolate");
  if (t == 0.0) return p;
  if (t == 1.0) return q;
  return to_spd(sym_exp((1.0 - t) * sym_log(p.to_dense()) + t * sym_log(q.to_dense())));
}

SpdMatrix mean(std::span<const SpdMatrix> ps) {
  require_nonempty(ps, "log_euclid::mean");
  if (ps.size() == 1) return ps.front();
  const auto m = static_cast<Eigen::Index>(ps.front().dim());
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(m, m);
  for (const auto& p : ps) acc += sym_log(p.to_dense());
  return to_spd(sym_exp(acc / static_cast<double>(ps.size())));
}

double metric(const SpdMatrix& p, const SymMatrix& w, const SymMatrix& v) {
  const Eigen::MatrixXd pd = p.to_dense();
  return (dlog_spectral(pd, w.to_dense()).array() * dlog_spectral(pd, v.to_dense()).array()).sum();
}

SpdMatrix exp_map(const SpdMatrix& p, const SymMatrix& w) {
  const Eigen::MatrixXd pd = p.to_dense();
  return to_spd(sym_exp(sym_log(pd) + dlog_spectral(pd, w.to_dense())));
}

SymMatrix log_map(const SpdMatrix& p, const SpdMatrix& q) {
  const Eigen::MatrixXd log_p = sym_log(p.to_dense());
  return SymMatrix::symmetrize(dexp_spectral(log_p, sym_log(q.to_dense()) - log_p));
}

TransportResult transport_detailed(const SpdMatrix& p, const SpdMatrix& q, const SymMatrix& w,
                                   double series_tol, int max_terms) {
  require_same_dim(p.dim(), q.dim(), "log_euclid::transport");
  require_same_dim(p.dim(), w.dim(), "log_euclid::transport");
  SeriesResult d = dlog_series(p.to_dense(), w.to_dense(), series_tol, max_terms);
  Eigen::MatrixXd out = dexp_spectral(sym_log(q.to_dense()), d.value);
  return {SymMatrix::symmetrize(out), d.terms, d.converged};
}

SymMatrix transport(const SpdMatrix& p, const SpdMatrix& q, const SymMatrix& w, double series_tol,
                    int max_terms) {
  return transport_detailed(p, q, w, series_tol, max_terms).value;
}

}  // namespace log_euclid

// ---------------------------------------------------------------------------

namespace affine {
namespace {

struct Whitening {
  Eigen::MatrixXd sqrt;
  Eigen::MatrixXd inv_sqrt;
};

Whitening whitening(const Eigen::MatrixXd& p) {
  SymEig e = sym_eig(p);
  if (!(e.values.minCoeff() > 0.0)) throw NotSpd("affine: non-positive eigenvalue");
  return {sym_apply(e, [](double x) { return std::sqrt(x); }),
          sym_apply(e, [](double x) { return 1.0 / std::sqrt(x); })};
}

Eigen::MatrixXd sandwich(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd r = a * b * a;
  return 0.5 * (r + r.transpose());
}

}  // namespace

double distance(const SpdMatrix& p, const SpdMatrix& q) {
  require_same_dim(p.dim(), q.dim(), "affine::distance");
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(q.to_dense(), p.to_dense(),
                                                                   Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw EigFailure("affine::distance: eigensolver failed");
  double s = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double l = solver.eigenvalues()(i);
    if (!(l > 0.0)) throw NotSpd("affine::distance: non-positive generalized eigenvalue");
    s += std::log(l) * std::log(l);
  }
  return std::sqrt(s);
}

SpdMatrix interpolate(const SpdMatrix& p, const SpdMatrix& q, double t) {
  require_same_dim(p.dim(), q.dim(), "affine::interpolate");
  if (t == 0.0) return p;
  if (t == 1.0) return q;
  const Whitening wp = whitening(p.to_dense());
  const Eigen::MatrixXd inner = sym_pow(sandwich(wp.inv_sqrt, q.to_dense()), t);
  return to_spd(sandwich(wp.sqrt, inner));
}

double metric(const SpdMatrix& p, const SymMatrix& w, const SymMatrix& v) {
  Eigen::LLT<Eigen::MatrixXd> llt(p.to_dense());
  const Eigen::MatrixXd a = llt.solve(w.to_dense());
  const Eigen::MatrixXd b = llt.solve(v.to_dense());
  return (a * b).trace();
}

SpdMatrix exp_map(const SpdMatrix& p, const SymMatrix& w) {
  const Whitening wp = whitening(p.to_dense());
  return to_spd(sandwich(wp.sqrt, sym_exp(sandwich(wp.inv_sqrt, w.to_dense()))));
}

SymMatrix log_map(const SpdMatrix& p, const SpdMatrix& q) {
  const Whitening wp = whitening(p.to_dense());
  return SymMatrix::symmetrize(sandwich(wp.sqrt, sym_log(sandwich(wp.inv_sqrt, q.to_dense()))));
}

SymMatrix transport(const SpdMatrix& p, const SpdMatrix& q, const SymMatrix& w) {
  require_same_dim(p.dim(), q.dim(), "affine::transport");
  require_same_dim(p.dim(), w.dim(), "affine::transport");
  const Whitening wp = whitening(p.to_dense());
  const Eigen::MatrixXd e = wp.sqrt * sym_sqrt(sandwich(wp.inv_sqrt, q.to_dense())) * wp.inv_sqrt;
  return SymMatrix::symmetrize(e * w.to_dense() * e.transpose());
}

KarcherResult karcher_mean_detailed(std::span<const SpdMatrix> ps, const KarcherOptions& opts) {
  require_nonempty(ps, "affine::karcher_mean");
  if (ps.size() == 1) return {ps.front(), 0, 0.0};
  const auto m = static_cast<Eigen::Index>(ps.front().dim());
  std::vector<Eigen::MatrixXd> dense;
  dense.reserve(ps.size());
  for (const auto& p : ps) dense.push_back(p.to_dense());

  Eigen::MatrixXd s = log_euclid::mean(ps).to_dense();
  double previous = std::numeric_limits<double>::infinity();
  for (int it = 0; it <= opts.max_iterations; ++it) {
    const Whitening ws = whitening(s);
    Eigen::MatrixXd grad = Eigen::MatrixXd::Zero(m, m);
    for (const auto& p : dense) grad += sym_log(sandwich(ws.inv_sqrt, p));
    grad /= static_cast<double>(dense.size());
    const double norm = grad.norm();
    if (norm < opts.tol || (norm >= previous && norm < 1e3 * opts.tol)) {
      return {to_spd(s), it, norm};
    }
    if (it == opts.max_iterations) break;
    previous = norm;
    s = sandwich(ws.sqrt, sym_exp(opts.step * grad));
  }
  throw NoConvergence("affine::karcher_mean: no convergence in " +
                      std::to_string(opts.max_iterations) + " iterations");
}

SpdMatrix karcher_mean(std::span<const SpdMatrix> ps, const KarcherOptions& opts) {
  return karcher_mean_detailed(ps, opts).mean;
}

}  // namespace affine

}  // namespace logchol
