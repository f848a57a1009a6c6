#include "logchol/tri_core.hpp"

#include "logchol/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace logchol {
namespace {

void check_buffer(std::size_t dim, const std::vector<double>& data, const char* type) {
  if (dim == 0) throw InvalidValue(std::string(type) + ": dimension must be positive");
  if (data.size() != packed_size(dim)) {
    throw InvalidValue(std::string(type) + ": packed length " + std::to_string(data.size()) +
                       " does not match dimension " + std::to_string(dim));
  }
  for (double v : data) {
    if (!std::isfinite(v)) throw InvalidValue(std::string(type) + ": non-finite entry");
  }
}

template <class F>
std::vector<double> zip(std::span<const double> a, std::span<const double> b, F f) {
  std::vector<double> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = f(a[k], b[k]);
  return out;
}

template <class F>
std::vector<double> map(std::span<const double> a, F f) {
  std::vector<double> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = f(a[k]);
  return out;
}

// Keeps the diagonal slots of a packed buffer and zeroes the rest, or the
// reverse.
std::vector<double> select(std::size_t dim, std::span<const double> a, bool keep_diag,
                           double diag_scale = 1.0) {
  std::vector<double> out(a.size(), 0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    const std::size_t row = packed_index(i, 0);
    if (keep_diag) {
      out[row + i] = diag_scale * a[row + i];
    } else {
      std::copy(a.begin() + row, a.begin() + row + i, out.begin() + row);
    }
  }
  return out;
}

}  // namespace

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": dimension " + std::to_string(a) + " vs " +
                            std::to_string(b));
  }
}

// ---------------------------------------------------------------------------
// LowerTriangular

LowerTriangular::LowerTriangular(std::size_t dim) : dim_(dim), data_(packed_size(dim), 0.0) {
  if (dim == 0) throw InvalidValue("LowerTriangular: dimension must be positive");
}

LowerTriangular::LowerTriangular(std::size_t dim, std::vector<double> packed)
    : dim_(dim), data_(std::move(packed)) {
  check_buffer(dim_, data_, "LowerTriangular");
}

LowerTriangular LowerTriangular::identity(std::size_t dim) {
  std::vector<double> d(dim, 1.0);
  return diagonal(d);
}

LowerTriangular LowerTriangular::diagonal(std::span<const double> diag) {
  std::vector<double> data(packed_size(diag.size()), 0.0);
  for (std::size_t j = 0; j < diag.size(); ++j) data[packed_index(j, j)] = diag[j];
  return LowerTriangular(diag.size(), std::move(data));
}

LowerTriangular LowerTriangular::from_dense(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw InvalidValue("LowerTriangular: matrix is not square");
  const auto m = static_cast<std::size_t>(a.rows());
  std::vector<double> data(packed_size(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double v = a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      if (j <= i) {
        data[packed_index(i, j)] = v;
      } else if (v != 0.0) {
        throw InvalidValue("LowerTriangular: non-zero entry above the diagonal at (" +
                           std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
  return LowerTriangular(m, std::move(data));
}

std::vector<double> LowerTriangular::diagonal_entries() const {
  std::vector<double> d(dim_);
  for (std::size_t j = 0; j < dim_; ++j) d[j] = diag(j);
  return d;
}

bool LowerTriangular::is_diagonal() const noexcept {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (data_[packed_index(i, j)] != 0.0) return false;
    }
  }
  return true;
}

Eigen::MatrixXd LowerTriangular::to_dense() const {
  const auto m = static_cast<Eigen::Index>(dim_);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) a(i, j) = (*this)(i, j);
  }
  return a;
}

LowerTriangular operator+(const LowerTriangular& a, const LowerTriangular& b) {
  require_same_dim(a.dim(), b.dim(), "LowerTriangular +");
  return LowerTriangular(a.dim(), zip(a.packed(), b.packed(), std::plus<>()));
}

LowerTriangular operator-(const LowerTriangular& a, const LowerTriangular& b) {
  require_same_dim(a.dim(), b.dim(), "LowerTriangular -");
  return LowerTriangular(a.dim(), zip(a.packed(), b.packed(), std::minus<>()));
}

LowerTriangular operator-(const LowerTriangular& a) {
  return LowerTriangular(a.dim(), map(a.packed(), std::negate<>()));
}

LowerTriangular operator*(double s, const LowerTriangular& a) {
  return LowerTriangular(a.dim(), map(a.packed(), [s](double v) { return s * v; }));
}

LowerTriangular multiply(const LowerTriangular& a, const LowerTriangular& b) {
  require_same_dim(a.dim(), b.dim(), "multiply");
  const std::size_t m = a.dim();
  std::vector<double> out(packed_size(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = 0.0;
      for (std::size_t k = j; k <= i; ++k) s += a(i, k) * b(k, j);
      out[packed_index(i, j)] = s;
    }
  }
  return LowerTriangular(m, std::move(out));
}

double frobenius_inner(const LowerTriangular& a, const LowerTriangular& b) {
  require_same_dim(a.dim(), b.dim(), "frobenius_inner");
  double s = 0.0;
  for (std::size_t k = 0; k < a.packed().size(); ++k) s += a.packed()[k] * b.packed()[k];
  return s;
}

double frobenius_norm(const LowerTriangular& a) { return std::sqrt(frobenius_inner(a, a)); }

// ---------------------------------------------------------------------------
// CholeskyFactor

CholeskyFactor::CholeskyFactor(LowerTriangular lower) : lower_(std::move(lower)) {
  for (std::size_t j = 0; j < lower_.dim(); ++j) {
    if (!(lower_.diag(j) > kPositivityTolerance)) {
      throw DomainError("CholeskyFactor: diagonal entry " + std::to_string(j) +
                        " is not positive");
    }
  }
}

CholeskyFactor CholeskyFactor::identity(std::size_t dim) {
  return CholeskyFactor(LowerTriangular::identity(dim));
}

// ---------------------------------------------------------------------------
// SymMatrix

SymMatrix::SymMatrix(std::size_t dim) : dim_(dim), data_(packed_size(dim), 0.0) {
  if (dim == 0) throw InvalidValue("SymMatrix: dimension must be positive");
}

SymMatrix::SymMatrix(std::size_t dim, std::vector<double> packed)
    : dim_(dim), data_(std::move(packed)) {
  check_buffer(dim_, data_, "SymMatrix");
}

SymMatrix SymMatrix::identity(std::size_t dim) {
  std::vector<double> d(dim, 1.0);
  return diagonal(d);
}

SymMatrix SymMatrix::diagonal(std::span<const double> diag) {
  std::vector<double> data(packed_size(diag.size()), 0.0);
  for (std::size_t j = 0; j < diag.size(); ++j) data[packed_index(j, j)] = diag[j];
  return SymMatrix(diag.size(), std::move(data));
}

SymMatrix SymMatrix::from_dense(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw InvalidValue("SymMatrix: matrix is not square");
  const Eigen::Index m = a.rows();
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < i; ++j) {
      const double scale = std::max({1.0, std::abs(a(i, j)), std::abs(a(j, i))});
      if (!(std::abs(a(i, j) - a(j, i)) <= 1e-12 * scale)) {
        throw InvalidValue("SymMatrix: matrix is not symmetric at (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
      }
    }
  }
  return symmetrize(a);
}

SymMatrix SymMatrix::symmetrize(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw InvalidValue("SymMatrix: matrix is not square");
  const auto m = static_cast<std::size_t>(a.rows());
  std::vector<double> data(packed_size(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const auto ii = static_cast<Eigen::Index>(i);
      const auto jj = static_cast<Eigen::Index>(j);
      data[packed_index(i, j)] = i == j ? a(ii, ii) : 0.5 * (a(ii, jj) + a(jj, ii));
    }
  }
  return SymMatrix(m, std::move(data));
}

Eigen::MatrixXd SymMatrix::to_dense() const {
  const auto m = static_cast<Eigen::Index>(dim_);
  Eigen::MatrixXd a(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      a(i, j) = a(j, i) = data_[packed_index(static_cast<std::size_t>(i), static_cast<std::size_t>(j))];
    }
  }
  return a;
}

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "SymMatrix +");
  return SymMatrix(a.dim(), zip(a.packed(), b.packed(), std::plus<>()));
}

SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "SymMatrix -");
  return SymMatrix(a.dim(), zip(a.packed(), b.packed(), std::minus<>()));
}

SymMatrix operator*(double s, const SymMatrix& a) {
  return SymMatrix(a.dim(), map(a.packed(), [s](double v) { return s * v; }));
}

double frobenius_inner(const SymMatrix& a, const SymMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "frobenius_inner");
  double off = 0.0;
  double on = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < i; ++j) off += a(i, j) * b(i, j);
    on += a.diag(i) * b.diag(i);
  }
  return on + 2.0 * off;
}

double frobenius_norm(const SymMatrix& a) { return std::sqrt(frobenius_inner(a, a)); }

SymMatrix gram(const LowerTriangular& l) {
  const std::size_t m = l.dim();
  const auto p = l.packed();
  std::vector<double> out(packed_size(m));
  for (std::size_t i = 0; i < m; ++i) {
    const double* ri = p.data() + packed_index(i, 0);
    for (std::size_t j = 0; j <= i; ++j) {
      const double* rj = p.data() + packed_index(j, 0);
      double s = 0.0;
      for (std::size_t k = 0; k <= j; ++k) s += ri[k] * rj[k];
      out[packed_index(i, j)] = s;
    }
  }
  return SymMatrix(m, std::move(out));
}

// ---------------------------------------------------------------------------
// SpdMatrix (the factorizing constructor lives in chol_map.cpp)

SpdMatrix SpdMatrix::from_factor(CholeskyFactor l) {
  SymMatrix s = gram(l.lower());
  return SpdMatrix(std::move(s), std::move(l));
}

SpdMatrix SpdMatrix::identity(std::size_t dim) { return from_factor(CholeskyFactor::identity(dim)); }

// ---------------------------------------------------------------------------
// Elementwise operators

LowerTriangular strict_lower(const LowerTriangular& a) {
  return LowerTriangular(a.dim(), select(a.dim(), a.packed(), false));
}

LowerTriangular strict_lower(const SymMatrix& a) {
  return LowerTriangular(a.dim(), select(a.dim(), a.packed(), false));
}

LowerTriangular diag_part(const LowerTriangular& a) {
  return LowerTriangular(a.dim(), select(a.dim(), a.packed(), true));
}

LowerTriangular diag_part(const SymMatrix& a) {
  return LowerTriangular(a.dim(), select(a.dim(), a.packed(), true));
}

LowerTriangular half_lower(const SymMatrix& s) {
  std::vector<double> out(s.packed().begin(), s.packed().end());
  for (std::size_t j = 0; j < s.dim(); ++j) out[packed_index(j, j)] *= 0.5;
  return LowerTriangular(s.dim(), std::move(out));
}

LowerTriangular diag_exp(const LowerTriangular& d) {
  std::vector<double> out(packed_size(d.dim()), 0.0);
  for (std::size_t j = 0; j < d.dim(); ++j) out[packed_index(j, j)] = std::exp(d.diag(j));
  return LowerTriangular(d.dim(), std::move(out));
}

LowerTriangular diag_log(const LowerTriangular& d) {
  std::vector<double> out(packed_size(d.dim()), 0.0);
  for (std::size_t j = 0; j < d.dim(); ++j) {
    if (!(d.diag(j) > 0.0)) {
      throw DomainError("diag_log: diagonal entry " + std::to_string(j) + " is not positive");
    }
    out[packed_index(j, j)] = std::log(d.diag(j));
  }
  return LowerTriangular(d.dim(), std::move(out));
}

double tri_det(const LowerTriangular& l) {
  double p = 1.0;
  for (std::size_t j = 0; j < l.dim(); ++j) p *= l.diag(j);
  return p;
}

double det(const SpdMatrix& p) {
  const double d = tri_det(p.factor());
  return d * d;
}

double log_det(const SpdMatrix& p) {
  double s = 0.0;
  for (std::size_t j = 0; j < p.dim(); ++j) s += std::log(p.factor().diag(j));
  return 2.0 * s;
}

}  // namespace logchol
