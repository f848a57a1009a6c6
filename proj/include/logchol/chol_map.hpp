#ifndef LOGCHOL_CHOL_MAP_HPP
#define LOGCHOL_CHOL_MAP_HPP

// The Cholesky map P -> L and its inverse L -> L L^T between SPD matrices and
// the Cholesky space, together with the differential of the inverse map and
// the inverse of that differential.

#include "logchol/tri_core.hpp"

namespace logchol {

/// Unique lower triangular L with positive diagonal and L L^T = P.
/// Row-by-row sweep:
///   L_ij = (P_ij - sum_{k<j} L_ik L_jk) / L_jj   (j < i)
///   L_ii = sqrt(P_ii - sum_{k<i} L_ik^2)
/// Throws NotSpd when a radicand is not positive or a value is not finite.
CholeskyFactor cholesky_factor(const SymMatrix& p);
/// The factor an SpdMatrix already carries.
const CholeskyFactor& cholesky_factor(const SpdMatrix& p);

/// L L^T.
SpdMatrix reconstruct(const CholeskyFactor& l);

/// Differential of L -> L L^T at L: X -> L X^T + X L^T.
SymTangent diff_S(const CholeskyFactor& l, const LowerTriangular& x);

/// Inverse of diff_S at L: W -> L (L^{-1} W L^{-T})_{1/2}. This is also the
/// differential of the Cholesky map at P = L L^T. L^{-1} W L^{-T} is formed by
/// two forward substitutions; L^{-1} is never built.
LowerTriangular diff_S_inv(const CholeskyFactor& l, const SymTangent& w);

/// L^{-1} W L^{-T} (symmetrized). Exposed for tests.
SymMatrix congruence_by_inverse(const CholeskyFactor& l, const SymMatrix& w);

/// Dense L^{-1} B for an m x m row-major buffer B, in place.
void forward_substitute(const LowerTriangular& l, std::span<double> b);

}  // namespace logchol

#endif  // LOGCHOL_CHOL_MAP_HPP
