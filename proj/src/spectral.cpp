#include "logchol/spectral.hpp"

#include "logchol/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace logchol {

SymEig sym_eig(const Eigen::MatrixXd& s) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s);
  if (solver.info() != Eigen::Success) throw EigFailure("sym_eig: eigensolver did not converge");
  if (!solver.eigenvalues().allFinite() || !solver.eigenvectors().allFinite()) {
    throw EigFailure("sym_eig: non-finite eigenpairs");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Eigen::MatrixXd sym_apply(const SymEig& e, const std::function<double(double)>& f) {
  Eigen::VectorXd fv = e.values.unaryExpr(f);
  return e.vectors * fv.asDiagonal() * e.vectors.transpose();
}

namespace {

SymEig spd_eig(const Eigen::MatrixXd& p, const char* what) {
  SymEig e = sym_eig(p);
  if (!(e.values.minCoeff() > 0.0)) {
    throw NotSpd(std::string(what) + ": non-positive eigenvalue " +
                 std::to_string(e.values.minCoeff()));
  }
  return e;
}

}  // namespace

Eigen::MatrixXd sym_log(const Eigen::MatrixXd& p) {
  return sym_apply(spd_eig(p, "sym_log"), [](double x) { return std::log(x); });
}

Eigen::MatrixXd sym_exp(const Eigen::MatrixXd& s) {
  return sym_apply(sym_eig(s), [](double x) { return std::exp(x); });
}

Eigen::MatrixXd sym_sqrt(const Eigen::MatrixXd& p) {
  return sym_apply(spd_eig(p, "sym_sqrt"), [](double x) { return std::sqrt(x); });
}

Eigen::MatrixXd sym_inv_sqrt(const Eigen::MatrixXd& p) {
  return sym_apply(spd_eig(p, "sym_inv_sqrt"), [](double x) { return 1.0 / std::sqrt(x); });
}

Eigen::MatrixXd sym_pow(const Eigen::MatrixXd& p, double t) {
  return sym_apply(spd_eig(p, "sym_pow"), [t](double x) { return std::pow(x, t); });
}

Eigen::MatrixXd divided_difference_differential(const SymEig& e, const Eigen::MatrixXd& w,
                                                const std::function<double(double)>& f,
                                                const std::function<double(double)>& df) {
  const Eigen::Index m = e.values.size();
  Eigen::MatrixXd wt = e.vectors.transpose() * w * e.vectors;
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      const double a = e.values(i);
      const double b = e.values(j);
      const double gap = a - b;
      const double dd = std::abs(gap) > 1e-10 * std::max({1.0, std::abs(a), std::abs(b)})
                            ? (f(a) - f(b)) / gap
                            : df(0.5 * (a + b));
      wt(i, j) *= dd;
    }
  }
  return e.vectors * wt * e.vectors.transpose();
}

Eigen::MatrixXd dexp_spectral(const Eigen::MatrixXd& s, const Eigen::MatrixXd& w) {
  auto ex = [](double x) { return std::exp(x); };
  return divided_difference_differential(sym_eig(s), w, ex, ex);
}

Eigen::MatrixXd dlog_spectral(const Eigen::MatrixXd& p, const Eigen::MatrixXd& w) {
  return divided_difference_differential(
      spd_eig(p, "dlog_spectral"), w, [](double x) { return std::log(x); },
      [](double x) { return 1.0 / x; });
}

SeriesResult dlog_series(const Eigen::MatrixXd& p, const Eigen::MatrixXd& w, double rel_tol,
                         int max_terms) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(p, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw EigFailure("dlog_series: eigensolver failed");
  const double lo = solver.eigenvalues().minCoeff();
  const double hi = solver.eigenvalues().maxCoeff();
  if (!(lo > 0.0)) throw NotSpd("dlog_series: non-positive eigenvalue");
  const double c = 2.0 / (lo + hi);

  const Eigen::Index m = p.rows();
  const Eigen::MatrixXd x = c * p - Eigen::MatrixXd::Identity(m, m);
  Eigen::MatrixXd t = w;        // T_k
  Eigen::MatrixXd xk = x;       // X^k
  Eigen::MatrixXd sum = w;      // k = 1 term
  Eigen::MatrixXd next(m, m);
  SeriesResult r;
  r.terms = 1;
  r.last_term_norm = w.norm();
  for (int k = 2; k <= max_terms; ++k) {
    next.noalias() = x * t;
    next.noalias() += w * xk;
    t.swap(next);
    const double sign = (k % 2 == 0) ? -1.0 : 1.0;
    const double scale = sign / static_cast<double>(k);
    sum += scale * t;
    r.terms = k;
    r.last_term_norm = std::abs(scale) * t.norm();
    if (r.last_term_norm <= rel_tol * sum.norm()) {
      r.converged = true;
      break;
    }
    next.noalias() = xk * x;
    xk.swap(next);
  }
  r.value = c * sum;
  return r;
}

}  // namespace logchol
