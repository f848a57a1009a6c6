#include "logchol/spd_manifold.hpp"

#include "logchol/chol_manifold.hpp"
#include "logchol/chol_map.hpp"

namespace logchol {

double metric_spd(const SpdMatrix& p, const SymTangent& w, const SymTangent& v) {
  const auto& l = p.factor();
  return metric_chol(l, diff_S_inv(l, w), diff_S_inv(l, v));
}

SpdMatrix geodesic_spd(const SpdMatrix& p, const SymTangent& w, double t) {
  const auto& l = p.factor();
  return reconstruct(geodesic_chol(l, diff_S_inv(l, w), t));
}

SpdMatrix exp_spd(const SpdMatrix& p, const SymTangent& w) { return geodesic_spd(p, w, 1.0); }

SymTangent log_spd(const SpdMatrix& p, const SpdMatrix& q) {
  return diff_S(p.factor(), log_chol(p.factor(), q.factor()));
}

double dist_spd(const SpdMatrix& p, const SpdMatrix& q) { return dist_chol(p.factor(), q.factor()); }

SpdMatrix group_op_spd(const SpdMatrix& p, const SpdMatrix& q) {
  return reconstruct(group_op(p.factor(), q.factor()));
}

SpdMatrix group_inv_spd(const SpdMatrix& p) { return reconstruct(group_inv(p.factor())); }

SymTangent transport_spd(const SpdMatrix& p, const SpdMatrix& q, const SymTangent& w) {
  const auto& l = p.factor();
  const auto& k = q.factor();
  return diff_S(k, transport_chol(l, k, diff_S_inv(l, w)));
}

SpdMatrix log_cholesky_mean(std::span<const SpdMatrix> ps,
                            std::optional<std::span<const double>> weights) {
  std::vector<CholeskyFactor> factors;
  factors.reserve(ps.size());
  for (const auto& p : ps) factors.push_back(p.factor());
  const auto mean = frechet_mean_chol(factors, weights);
  return ps.size() == 1 ? ps.front() : reconstruct(mean);
}

std::vector<SpdMatrix> interpolate_spd(const SpdMatrix& p, const SpdMatrix& q,
                                       std::span<const double> ts) {
  require_same_dim(p.dim(), q.dim(), "interpolate_spd");
  // Factor-space direction; identical to diff_S_inv(L, log_spd(P, Q)) but
  // without the round trip through the tangent map.
  const auto& l = p.factor();
  const LowerTriangular x = log_chol(l, q.factor());
  std::vector<SpdMatrix> out;
  out.reserve(ts.size());
  for (double t : ts) {
    if (t == 0.0) {
      out.push_back(p);
    } else if (t == 1.0) {
      out.push_back(q);
    } else {
      out.push_back(reconstruct(geodesic_chol(l, x, t)));
    }
  }
  return out;
}

double frechet_functional_spd(const SpdMatrix& s, std::span<const SpdMatrix> ps) {
  double total = 0.0;
  for (const auto& p : ps) {
    const double d = dist_spd(s, p);
    total += d * d;
  }
  return total;
}

}  // namespace logchol
