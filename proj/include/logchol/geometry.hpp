#ifndef LOGCHOL_GEOMETRY_HPP
#define LOGCHOL_GEOMETRY_HPP

// One entry point per operation for all five geometries, keyed by Metric.

#include "logchol/tri_core.hpp"

#include <array>
#include <span>
#include <string>
#include <string_view>

namespace logchol {

enum class Metric { Euclidean, Cholesky, LogEuclidean, AffineInvariant, LogCholesky };

inline constexpr std::array<Metric, 5> kAllMetrics = {
    Metric::Euclidean, Metric::Cholesky, Metric::LogEuclidean, Metric::AffineInvariant,
    Metric::LogCholesky};

/// "euclidean", "cholesky", "log-euclidean", "affine-invariant", "log-cholesky".
std::string_view metric_name(Metric m);
/// Throws InvalidValue for an unknown selector.
Metric parse_metric(std::string_view name);

double distance(Metric metric, const SpdMatrix& p, const SpdMatrix& q);
/// Geodesic point at t (straight line for Euclidean). Only the Euclidean
/// result can leave the SPD cone, and only for t outside [0, 1].
SymMatrix interpolate(Metric metric, const SpdMatrix& p, const SpdMatrix& q, double t);
SymMatrix mean(Metric metric, std::span<const SpdMatrix> ps);
/// Parallel transport of W from P to Q (identity for Euclidean).
SymMatrix transport(Metric metric, const SpdMatrix& p, const SpdMatrix& q, const SymMatrix& w);

}  // namespace logchol

#endif  // LOGCHOL_GEOMETRY_HPP
