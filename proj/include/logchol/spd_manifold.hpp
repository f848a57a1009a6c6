#ifndef LOGCHOL_SPD_MANIFOLD_HPP
#define LOGCHOL_SPD_MANIFOLD_HPP

// Log-Cholesky geometry of SPD matrices: the Cholesky-space structure pushed
// through L -> L L^T. Every operation factors its SPD arguments (or reuses the
// factor an SpdMatrix carries), moves tangent vectors with diff_S_inv, works
// in the Cholesky space and maps back with L L^T / diff_S.

#include "logchol/tri_core.hpp"

#include <optional>
#include <span>
#include <vector>

namespace logchol {

/// g_P(W, V) = g_L(diff_S_inv(L, W), diff_S_inv(L, V)) with L the factor of P.
double metric_spd(const SpdMatrix& p, const SymTangent& w, const SymTangent& v);

SpdMatrix geodesic_spd(const SpdMatrix& p, const SymTangent& w, double t);
SpdMatrix exp_spd(const SpdMatrix& p, const SymTangent& w);
SymTangent log_spd(const SpdMatrix& p, const SpdMatrix& q);
double dist_spd(const SpdMatrix& p, const SpdMatrix& q);

/// P (*) Q = S(L(P) (.) L(Q)).
SpdMatrix group_op_spd(const SpdMatrix& p, const SpdMatrix& q);
SpdMatrix group_inv_spd(const SpdMatrix& p);

SymTangent transport_spd(const SpdMatrix& p, const SpdMatrix& q, const SymTangent& w);

/// Closed-form Frechet average E E^T where E is the Cholesky-space average of
/// the factors. Optional weights must be non-negative and sum to 1. Throws
/// EmptyInput on an empty list.
SpdMatrix log_cholesky_mean(std::span<const SpdMatrix> ps,
                            std::optional<std::span<const double>> weights = std::nullopt);

/// Points of the geodesic from P (t = 0) to Q (t = 1) at each t.
std::vector<SpdMatrix> interpolate_spd(const SpdMatrix& p, const SpdMatrix& q,
                                       std::span<const double> ts);

double frechet_functional_spd(const SpdMatrix& s, std::span<const SpdMatrix> ps);

}  // namespace logchol

#endif  // LOGCHOL_SPD_MANIFOLD_HPP
