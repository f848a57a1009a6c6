#include "logchol/geometry.hpp"

#include "logchol/baselines.hpp"
#include "logchol/errors.hpp"
#include "logchol/spd_manifold.hpp"

namespace logchol {

std::string_view metric_name(Metric m) {
  switch (m) {
    case Metric::Euclidean: return "euclidean";
    case Metric::Cholesky: return "cholesky";
    case Metric::LogEuclidean: return "log-euclidean";
    case Metric::AffineInvariant: return "affine-invariant";
    case Metric::LogCholesky: return "log-cholesky";
  }
  return "unknown";
}

Metric parse_metric(std::string_view name) {
  for (Metric m : kAllMetrics) {
    if (metric_name(m) == name) return m;
  }
  throw InvalidValue("unknown metric '" + std::string(name) +
                     "' (expected euclidean, cholesky, log-euclidean, affine-invariant or "
                     "log-cholesky)");
}

double distance(Metric metric, const SpdMatrix& p, const SpdMatrix& q) {
  switch (metric) {
    case Metric::Euclidean: return euclid::distance(p, q);
    case Metric::Cholesky: return cholesky_dist::distance(p, q);
    case Metric::LogEuclidean: return log_euclid::distance(p, q);
    case Metric::AffineInvariant: return affine::distance(p, q);
    case Metric::LogCholesky: return dist_spd(p, q);
  }
  throw InvalidValue("distance: bad metric");
}

SymMatrix interpolate(Metric metric, const SpdMatrix& p, const SpdMatrix& q, double t) {
  switch (metric) {
    case Metric::Euclidean: return euclid::interpolate(p, q, t);
    case Metric::Cholesky: return cholesky_dist::interpolate(p, q, t).sym();
    case Metric::LogEuclidean: return log_euclid::interpolate(p, q, t).sym();
    case Metric::AffineInvariant: return affine::interpolate(p, q, t).sym();
    case Metric::LogCholesky: {
      const double ts[] = {t};
      return interpolate_spd(p, q, ts).front().sym();
    }
  }
  throw InvalidValue("interpolate: bad metric");
}

SymMatrix mean(Metric metric, std::span<const SpdMatrix> ps) {
  switch (metric) {
    case Metric::Euclidean: return euclid::mean(ps);
    case Metric::Cholesky: return cholesky_dist::mean(ps).sym();
    case Metric::LogEuclidean: return log_euclid::mean(ps).sym();
    case Metric::AffineInvariant: return affine::karcher_mean(ps).sym();
    case Metric::LogCholesky: return log_cholesky_mean(ps).sym();
  }
  throw InvalidValue("mean: bad metric");
}

SymMatrix transport(Metric metric, const SpdMatrix& p, const SpdMatrix& q, const SymMatrix& w) {
  switch (metric) {
    case Metric::Euclidean: return w;
    case Metric::Cholesky: return cholesky_dist::transport(p, q, w);
    case Metric::LogEuclidean: return log_euclid::transport(p, q, w);
    case Metric::AffineInvariant: return affine::transport(p, q, w);
    case Metric::LogCholesky: return transport_spd(p, q, w);
  }
  throw InvalidValue("transport: bad metric");
}

}  // namespace logchol
