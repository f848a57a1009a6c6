#ifndef LOGCHOL_CHOL_MANIFOLD_HPP
#define LOGCHOL_CHOL_MANIFOLD_HPP

// Riemannian and group structure of the Cholesky space (lower triangular
// matrices with positive diagonal).
//
// The metric at L treats the strict lower part as Euclidean and weights the
// diagonal by L_jj^{-2}:
//
//   g_L(X, Y) = sum_{i>j} X_ij Y_ij + sum_j X_jj Y_jj / L_jj^2
//
// In the coordinates (strict lower entries, log of the diagonal) this metric
// is the flat Euclidean one, which is why every map below is a closed form
// acting on the strict lower part linearly and on the diagonal through
// scalar exp/log. The space is complete and flat; geodesics are defined for
// all t and parallel transport does not depend on the path.
//
// The group product X (.) Y = strict(X) + strict(Y) + D(X) D(Y) is abelian
// with identity I, and the metric is bi-invariant under it.

#include "logchol/tri_core.hpp"

#include <optional>
#include <span>
#include <vector>

namespace logchol {

/// A tangent vector together with its base point.
struct TangentAtFactor {
  TangentAtFactor(CholeskyFactor base_, LowerTriangular vec_);

  CholeskyFactor base;
  LowerTriangular vec;
};

double metric_chol(const CholeskyFactor& l, const LowerTriangular& x, const LowerTriangular& y);

/// strict(L) + t strict(X) + D(L) exp(t D(X) D(L)^{-1}).
CholeskyFactor geodesic_chol(const CholeskyFactor& l, const LowerTriangular& x, double t);

CholeskyFactor exp_chol(const CholeskyFactor& l, const LowerTriangular& x);

/// strict(K) - strict(L) + D(L) log(D(L)^{-1} D(K)).
LowerTriangular log_chol(const CholeskyFactor& l, const CholeskyFactor& k);

double dist_chol(const CholeskyFactor& l, const CholeskyFactor& k);

LowerTriangular group_op(const LowerTriangular& x, const LowerTriangular& y);
CholeskyFactor group_op(const CholeskyFactor& l, const CholeskyFactor& k);
/// D(L)^{-1} - strict(L).
CholeskyFactor group_inv(const CholeskyFactor& l);

/// Differential of left translation by A (independent of the base point):
/// X -> strict(X) + D(A) D(X).
LowerTriangular left_translate_differential(const CholeskyFactor& a, const LowerTriangular& x);

/// Parallel transport from L to K along the connecting geodesic:
/// strict(X) + D(K) D(L)^{-1} D(X). The strict lower part is copied
/// unchanged.
LowerTriangular transport_chol(const CholeskyFactor& l, const CholeskyFactor& k,
                               const LowerTriangular& x);
TangentAtFactor transport_chol(const TangentAtFactor& v, const CholeskyFactor& k);

/// Frechet average: (1/n) sum strict(L_i) + exp((1/n) sum log D(L_i)).
/// With weights w_i (non-negative, summing to 1) the 1/n factors become w_i.
/// Throws EmptyInput for an empty list.
CholeskyFactor frechet_mean_chol(std::span<const CholeskyFactor> ls,
                                 std::optional<std::span<const double>> weights = std::nullopt);

/// Sum of squared distances from l to every point.
double frechet_functional_chol(const CholeskyFactor& l, std::span<const CholeskyFactor> ls);

}  // namespace logchol

#endif  // LOGCHOL_CHOL_MANIFOLD_HPP
