#ifndef LOGCHOL_BASELINES_HPP
#define LOGCHOL_BASELINES_HPP

// Comparator geometries on SPD matrices: Euclidean, Cholesky distance,
// Log-Euclidean and affine-invariant.

#include "logchol/spectral.hpp"
#include "logchol/tri_core.hpp"

#include <span>

namespace logchol {

namespace euclid {

double distance(const SymMatrix& p, const SymMatrix& q);
/// (1 - t) P + t Q.
SymMatrix interpolate(const SymMatrix& p, const SymMatrix& q, double t);
SymMatrix mean(std::span<const SpdMatrix> ps);

}  // namespace euclid

/// Frobenius distance between Cholesky factors; geodesics are straight lines
/// between the factors.
namespace cholesky_dist {

double distance(const SpdMatrix& p, const SpdMatrix& q);
/// {(1 - t) L_P + t L_Q}{(1 - t) L_P + t L_Q}^T.
SpdMatrix interpolate(const SpdMatrix& p, const SpdMatrix& q, double t);
/// Square of the arithmetic mean of the factors.
SpdMatrix mean(std::span<const SpdMatrix> ps);
/// The factor-space tangent is Euclidean, so it is carried over unchanged:
/// W -> diff_S(L_Q, diff_S_inv(L_P, W)).
SymMatrix transport(const SpdMatrix& p, const SpdMatrix& q, const SymMatrix& w);

}  // namespace cholesky_dist

namespace log_euclid {

/// ||log P - log Q||_F.
double distance(const SpdMatrix& p, const SpdMatrix& q);
/// exp((1 - t) log P + t log Q).
SpdMatrix interpolate(const SpdMatrix& p, const SpdMatrix& q, double t);
/// exp(mean of log P_i).
SpdMatrix mean(std::span<const SpdMatrix> ps);
/// <D log_P(W), D log_P(V)>_F.
double metric(const SpdMatrix& p, const SymMatrix& w, const SymMatrix& v);
/// Riemannian exp / log. Both use the eigendecomposition form of the
/// differentials.
SpdMatrix exp_map(const SpdMatrix& p, const SymMatrix& w);
SymMatrix log_map(const SpdMatrix& p, const SpdMatrix& q);

struct TransportResult {
  SymMatrix value;
  int series_terms;
  bool series_converged;
};

/// Parallel transport W -> D exp_{log Q}(D log_P(W)). D log_P is evaluated by
/// its power series (see dlog_series) truncated at a relative term size of
/// series_tol or max_terms terms.
TransportResult transport_detailed(const SpdMatrix& p, const SpdMatrix& q, const SymMatrix& w,
                                   double series_tol = 1e-12, int max_terms = 500);
SymMatrix transport(const SpdMatrix& p, const SpdMatrix& q, const SymMatrix& w,
                    double series_tol = 1e-12, int max_terms = 500);

}  // namespace log_euclid

namespace affine {

/// ||log(P^{-1/2} Q P^{-1/2})||_F, from the generalized eigenvalues of (Q, P).
double distance(const SpdMatrix& p, const SpdMatrix& q);
/// P^{1/2} (P^{-1/2} Q P^{-1/2})^t P^{1/2}.
SpdMatrix interpolate(const SpdMatrix& p, const SpdMatrix& q, double t);
/// tr(P^{-1} W P^{-1} V).
double metric(const SpdMatrix& p, const SymMatrix& w, const SymMatrix& v);
SpdMatrix exp_map(const SpdMatrix& p, const SymMatrix& w);
SymMatrix log_map(const SpdMatrix& p, const SpdMatrix& q);
/// E W E^T with E = (Q P^{-1})^{1/2} = P^{1/2} (P^{-1/2} Q P^{-1/2})^{1/2} P^{-1/2}.
SymMatrix transport(const SpdMatrix& p, const SpdMatrix& q, const SymMatrix& w);

struct KarcherOptions {
  double tol = 1e-12;       // on ||mean of log(S^{-1/2} P_i S^{-1/2})||_F
  int max_iterations = 200;
  double step = 1.0;
};

struct KarcherResult {
  SpdMatrix mean;
  int iterations;
  double gradient_norm;
};

/// Fixed-point iteration
///   S <- S^{1/2} exp(step * (1/n) sum log(S^{-1/2} P_i S^{-1/2})) S^{1/2}
/// from the Log-Euclidean mean. Stops when the gradient norm is below tol.
/// Roundoff puts a floor under the gradient norm for ill-conditioned inputs;
/// once it stops decreasing while already below 1e3 * tol, the iterate is
/// accepted as converged. Throws NoConvergence otherwise after
/// max_iterations.
KarcherResult karcher_mean_detailed(std::span<const SpdMatrix> ps, const KarcherOptions& opts = {});
SpdMatrix karcher_mean(std::span<const SpdMatrix> ps, const KarcherOptions& opts = {});

}  // namespace affine

}  // namespace logchol

#endif  // LOGCHOL_BASELINES_HPP
