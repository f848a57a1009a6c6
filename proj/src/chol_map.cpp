#include "logchol/chol_map.hpp"

#include "logchol/errors.hpp"

#include <cmath>
#include <string>

namespace logchol {

CholeskyFactor cholesky_factor(const SymMatrix& p) {
  const std::size_t m = p.dim();
  const auto a = p.packed();
  std::vector<double> l(packed_size(m));
  for (std::size_t i = 0; i < m; ++i) {
    double* li = l.data() + packed_index(i, 0);
    const double* ai = a.data() + packed_index(i, 0);
    for (std::size_t j = 0; j < i; ++j) {
      const double* lj = l.data() + packed_index(j, 0);
      double s = ai[j];
      for (std::size_t k = 0; k < j; ++k) s -= li[k] * lj[k];
      li[j] = s / lj[j];
    }
    double d = ai[i];
    for (std::size_t k = 0; k < i; ++k) d -= li[k] * li[k];
    if (!(d > 0.0) || !std::isfinite(d)) {
      throw NotSpd("cholesky_factor: pivot " + std::to_string(i) + " is not positive (" +
                   std::to_string(d) + ")");
    }
    li[i] = std::sqrt(d);
    if (!(li[i] > kPositivityTolerance)) {
      throw NotSpd("cholesky_factor: pivot " + std::to_string(i) + " underflows");
    }
  }
  return CholeskyFactor(LowerTriangular(m, std::move(l)));
}

const CholeskyFactor& cholesky_factor(const SpdMatrix& p) { return p.factor(); }

SpdMatrix::SpdMatrix(SymMatrix s) : sym_(std::move(s)), factor_(cholesky_factor(sym_)) {}

SpdMatrix reconstruct(const CholeskyFactor& l) { return SpdMatrix::from_factor(l); }

SymTangent diff_S(const CholeskyFactor& l, const LowerTriangular& x) {
  require_same_dim(l.dim(), x.dim(), "diff_S");
  const std::size_t m = l.dim();
  const auto lp = l.packed();
  const auto xp = x.packed();
  std::vector<double> out(packed_size(m));
  // (L X^T + X L^T)_ij = sum_{k<=j} L_ik X_jk + X_ik L_jk for j <= i.
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t ri = packed_index(i, 0);
    for (std::size_t j = 0; j <= i; ++j) {
      const std::size_t rj = packed_index(j, 0);
      double s = 0.0;
      for (std::size_t k = 0; k <= j; ++k) s += lp[ri + k] * xp[rj + k] + xp[ri + k] * lp[rj + k];
      out[packed_index(i, j)] = s;
    }
  }
  return SymTangent(m, std::move(out));
}

void forward_substitute(const LowerTriangular& l, std::span<double> b) {
  const std::size_t m = l.dim();
  const auto lp = l.packed();
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t ri = packed_index(i, 0);
    double* bi = b.data() + i * m;
    for (std::size_t k = 0; k < i; ++k) {
      const double lik = lp[ri + k];
      if (lik == 0.0) continue;
      const double* bk = b.data() + k * m;
      for (std::size_t c = 0; c < m; ++c) bi[c] -= lik * bk[c];
    }
    const double inv = 1.0 / lp[ri + i];
    for (std::size_t c = 0; c < m; ++c) bi[c] *= inv;
  }
}

SymMatrix congruence_by_inverse(const CholeskyFactor& l, const SymMatrix& w) {
  require_same_dim(l.dim(), w.dim(), "congruence_by_inverse");
  const std::size_t m = l.dim();
  std::vector<double> buf(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) buf[i * m + j] = w(i, j);
  }
  // Z = L^{-1} W, then Y^T = L^{-1} Z^T = (Z L^{-T})^T.
  forward_substitute(l, buf);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) std::swap(buf[i * m + j], buf[j * m + i]);
  }
  forward_substitute(l, buf);
  std::vector<double> out(packed_size(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      out[packed_index(i, j)] = i == j ? buf[i * m + i] : 0.5 * (buf[i * m + j] + buf[j * m + i]);
    }
  }
  return SymMatrix(m, std::move(out));
}

LowerTriangular diff_S_inv(const CholeskyFactor& l, const SymTangent& w) {
  return multiply(l, half_lower(congruence_by_inverse(l, w)));
}

}  // namespace logchol
