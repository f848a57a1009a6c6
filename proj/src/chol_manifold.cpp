#include "logchol/chol_manifold.hpp"

#include "logchol/errors.hpp"

#include <cmath>
#include <string>

namespace logchol {
namespace {

// Copies the strict lower part of `from` into `out` and fills the diagonal
// with f(j).
template <class F>
std::vector<double> with_diagonal(std::span<const double> from, std::size_t m, F f) {
  std::vector<double> out(from.begin(), from.end());
  for (std::size_t j = 0; j < m; ++j) out[packed_index(j, j)] = f(j);
  return out;
}

void check_weights(std::span<const double> w, std::size_t n) {
  if (w.size() != n) {
    throw DimensionMismatch("frechet mean: " + std::to_string(w.size()) + " weights for " +
                            std::to_string(n) + " points");
  }
  double total = 0.0;
  for (double v : w) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw InvalidValue("frechet mean: negative weight");
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-12) throw InvalidValue("frechet mean: weights must sum to 1");
}

}  // namespace

TangentAtFactor::TangentAtFactor(CholeskyFactor base_, LowerTriangular vec_)
    : base(std::move(base_)), vec(std::move(vec_)) {
  require_same_dim(base.dim(), vec.dim(), "TangentAtFactor");
}

double metric_chol(const CholeskyFactor& l, const LowerTriangular& x, const LowerTriangular& y) {
  require_same_dim(l.dim(), x.dim(), "metric_chol");
  require_same_dim(l.dim(), y.dim(), "metric_chol");
  double off = 0.0;
  double on = 0.0;
  for (std::size_t i = 0; i < l.dim(); ++i) {
    for (std::size_t j = 0; j < i; ++j) off += x(i, j) * y(i, j);
    const double d = l.diag(i);
    on += x.diag(i) * y.diag(i) / (d * d);
  }
  return off + on;
}

CholeskyFactor geodesic_chol(const CholeskyFactor& l, const LowerTriangular& x, double t) {
  require_same_dim(l.dim(), x.dim(), "geodesic_chol");
  const std::size_t m = l.dim();
  std::vector<double> out(packed_size(m));
  const auto lp = l.packed();
  const auto xp = x.packed();
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t r = packed_index(i, 0);
    for (std::size_t j = 0; j < i; ++j) out[r + j] = lp[r + j] + t * xp[r + j];
    out[r + i] = lp[r + i] * std::exp(t * xp[r + i] / lp[r + i]);
  }
  return CholeskyFactor(LowerTriangular(m, std::move(out)));
}

CholeskyFactor exp_chol(const CholeskyFactor& l, const LowerTriangular& x) {
  return geodesic_chol(l, x, 1.0);
}

LowerTriangular log_chol(const CholeskyFactor& l, const CholeskyFactor& k) {
  require_same_dim(l.dim(), k.dim(), "log_chol");
  const std::size_t m = l.dim();
  std::vector<double> out(packed_size(m));
  const auto lp = l.packed();
  const auto kp = k.packed();
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t r = packed_index(i, 0);
    for (std::size_t j = 0; j < i; ++j) out[r + j] = kp[r + j] - lp[r + j];
    out[r + i] = lp[r + i] * std::log(kp[r + i] / lp[r + i]);
  }
  return LowerTriangular(m, std::move(out));
}

double dist_chol(const CholeskyFactor& l, const CholeskyFactor& k) {
  require_same_dim(l.dim(), k.dim(), "dist_chol");
  double s = 0.0;
  for (std::size_t i = 0; i < l.dim(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const double d = l(i, j) - k(i, j);
      s += d * d;
    }
    const double g = std::log(l.diag(i)) - std::log(k.diag(i));
    s += g * g;
  }
  return std::sqrt(s);
}

LowerTriangular group_op(const LowerTriangular& x, const LowerTriangular& y) {
  require_same_dim(x.dim(), y.dim(), "group_op");
  const std::size_t m = x.dim();
  std::vector<double> out(packed_size(m));
  const auto xp = x.packed();
  const auto yp = y.packed();
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t r = packed_index(i, 0);
    for (std::size_t j = 0; j < i; ++j) out[r + j] = xp[r + j] + yp[r + j];
    out[r + i] = xp[r + i] * yp[r + i];
  }
  return LowerTriangular(m, std::move(out));
}

CholeskyFactor group_op(const CholeskyFactor& l, const CholeskyFactor& k) {
  return CholeskyFactor(group_op(l.lower(), k.lower()));
}

CholeskyFactor group_inv(const CholeskyFactor& l) {
  const std::size_t m = l.dim();
  std::vector<double> out(packed_size(m));
  const auto lp = l.packed();
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t r = packed_index(i, 0);
    for (std::size_t j = 0; j < i; ++j) out[r + j] = -lp[r + j];
    out[r + i] = 1.0 / lp[r + i];
  }
  return CholeskyFactor(LowerTriangular(m, std::move(out)));
}

LowerTriangular left_translate_differential(const CholeskyFactor& a, const LowerTriangular& x) {
  require_same_dim(a.dim(), x.dim(), "left_translate_differential");
  return LowerTriangular(x.dim(), with_diagonal(x.packed(), x.dim(), [&](std::size_t j) {
                           return a.diag(j) * x.diag(j);
                         }));
}

LowerTriangular transport_chol(const CholeskyFactor& l, const CholeskyFactor& k,
                               const LowerTriangular& x) {
  require_same_dim(l.dim(), k.dim(), "transport_chol");
  require_same_dim(l.dim(), x.dim(), "transport_chol");
  return LowerTriangular(x.dim(), with_diagonal(x.packed(), x.dim(), [&](std::size_t j) {
                           return k.diag(j) / l.diag(j) * x.diag(j);
                         }));
}

TangentAtFactor transport_chol(const TangentAtFactor& v, const CholeskyFactor& k) {
  return TangentAtFactor(k, transport_chol(v.base, k, v.vec));
}

CholeskyFactor frechet_mean_chol(std::span<const CholeskyFactor> ls,
                                 std::optional<std::span<const double>> weights) {
  if (ls.empty()) throw EmptyInput("frechet_mean_chol: no points");
  const std::size_t m = ls.front().dim();
  for (const auto& l : ls) require_same_dim(m, l.dim(), "frechet_mean_chol");
  if (weights) check_weights(*weights, ls.size());
  if (ls.size() == 1) return ls.front();

  // Accumulate strict lower entries and log-diagonals in one pass.
  std::vector<double> acc(packed_size(m), 0.0);
  for (std::size_t n = 0; n < ls.size(); ++n) {
    const auto p = ls[n].packed();
    const double w = weights ? (*weights)[n] : 1.0;
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t r = packed_index(i, 0);
      for (std::size_t j = 0; j < i; ++j) acc[r + j] += weights ? w * p[r + j] : p[r + j];
      acc[r + i] += weights ? w * std::log(p[r + i]) : std::log(p[r + i]);
    }
  }
  const double count = static_cast<double>(ls.size());
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t r = packed_index(i, 0);
    if (!weights) {
      for (std::size_t j = 0; j <= i; ++j) acc[r + j] /= count;
    }
    acc[r + i] = std::exp(acc[r + i]);
  }
  return CholeskyFactor(LowerTriangular(m, std::move(acc)));
}

double frechet_functional_chol(const CholeskyFactor& l, std::span<const CholeskyFactor> ls) {
  double s = 0.0;
  for (const auto& k : ls) {
    const double d = dist_chol(l, k);
    s += d * d;
  }
  return s;
}

}  // namespace logchol
