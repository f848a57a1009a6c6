#ifndef LOGCHOL_SPECTRAL_HPP
#define LOGCHOL_SPECTRAL_HPP

// Symmetric matrix functions through the symmetric eigendecomposition, and
// the differentials of the matrix logarithm and exponential used by the
// Log-Euclidean baseline.

#include "logchol/tri_core.hpp"

#include <Eigen/Core>

#include <functional>

namespace logchol {

struct SymEig {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // orthonormal columns
};

/// Throws EigFailure if the solver does not converge or returns non-finite
/// output.
SymEig sym_eig(const Eigen::MatrixXd& s);

/// V f(Lambda) V^T.
Eigen::MatrixXd sym_apply(const SymEig& e, const std::function<double(double)>& f);

/// log of an SPD matrix. Throws NotSpd if an eigenvalue comes out <= 0.
Eigen::MatrixXd sym_log(const Eigen::MatrixXd& p);
Eigen::MatrixXd sym_exp(const Eigen::MatrixXd& s);
Eigen::MatrixXd sym_sqrt(const Eigen::MatrixXd& p);
Eigen::MatrixXd sym_inv_sqrt(const Eigen::MatrixXd& p);
/// P^t for SPD P.
Eigen::MatrixXd sym_pow(const Eigen::MatrixXd& p, double t);

/// Daleckii-Krein form of the differential of f at S = V diag(l) V^T:
/// V (F o (V^T W V)) V^T with F_ij the first divided difference of f.
Eigen::MatrixXd divided_difference_differential(const SymEig& e, const Eigen::MatrixXd& w,
                                                const std::function<double(double)>& f,
                                                const std::function<double(double)>& df);

/// D exp at S applied to W.
Eigen::MatrixXd dexp_spectral(const Eigen::MatrixXd& s, const Eigen::MatrixXd& w);
/// D log at P applied to W.
Eigen::MatrixXd dlog_spectral(const Eigen::MatrixXd& p, const Eigen::MatrixXd& w);

struct SeriesResult {
  Eigen::MatrixXd value;
  int terms = 0;
  double last_term_norm = 0.0;
  bool converged = false;
};

/// D log at P applied to W by the power series of log(I + X).
///
/// P is scaled to cP with c = 2 / (lambda_max + lambda_min), so X = cP - I has
/// spectral radius (kappa - 1) / (kappa + 1) < 1, and
///   D log_P(W) = c sum_{k>=1} (-1)^{k+1} / k sum_{j=0}^{k-1} X^j W X^{k-1-j}.
/// The inner sums obey T_1 = W, T_{k+1} = X T_k + W X^k. Terms are added until
/// the Frobenius norm of a term drops below rel_tol times that of the partial
/// sum, or max_terms is reached.
SeriesResult dlog_series(const Eigen::MatrixXd& p, const Eigen::MatrixXd& w,
                         double rel_tol = 1e-12, int max_terms = 500);

}  // namespace logchol

#endif  // LOGCHOL_SPECTRAL_HPP
