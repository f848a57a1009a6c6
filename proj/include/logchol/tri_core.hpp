#ifndef LOGCHOL_TRI_CORE_HPP
#define LOGCHOL_TRI_CORE_HPP

// Packed lower-triangular and symmetric matrix types.
//
// Both LowerTriangular and SymMatrix store the lower triangle (diagonal
// included) row by row: entry (i, j) with j <= i lives at i(i+1)/2 + j.
// Rows are contiguous, so the dot products of a row-oriented Cholesky sweep
// and the strict-lower / diagonal splits are plain slices of the buffer.

#include <Eigen/Core>

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace logchol {

/// Smallest accepted diagonal entry of a CholeskyFactor (and pivot of an
/// SpdMatrix). Any representable positive value passes.
inline constexpr double kPositivityTolerance = 1e-300;

constexpr std::size_t packed_size(std::size_t m) noexcept { return m * (m + 1) / 2; }

/// Offset of (i, j), j <= i, in packed row-major lower storage.
constexpr std::size_t packed_index(std::size_t i, std::size_t j) noexcept {
  return i * (i + 1) / 2 + j;
}

/// m x m lower triangular matrix. Also the tangent space of the Cholesky
/// space at any point.
class LowerTriangular {
 public:
  /// Zero matrix.
  explicit LowerTriangular(std::size_t dim);
  /// Takes ownership of a packed buffer; throws if the length is not
  /// dim(dim+1)/2 or if any entry is NaN/Inf.
  LowerTriangular(std::size_t dim, std::vector<double> packed);

  static LowerTriangular identity(std::size_t dim);
  static LowerTriangular diagonal(std::span<const double> diag);
  /// Rejects matrices with a non-zero entry above the diagonal.
  static LowerTriangular from_dense(const Eigen::MatrixXd& a);

  std::size_t dim() const noexcept { return dim_; }
  /// Zero above the diagonal.
  double operator()(std::size_t i, std::size_t j) const noexcept {
    return j > i ? 0.0 : data_[packed_index(i, j)];
  }
  double diag(std::size_t j) const noexcept { return data_[packed_index(j, j)]; }
  std::span<const double> packed() const noexcept { return data_; }
  std::vector<double> diagonal_entries() const;
  bool is_diagonal() const noexcept;

  Eigen::MatrixXd to_dense() const;

  friend bool operator==(const LowerTriangular&, const LowerTriangular&) = default;

 private:
  std::size_t dim_;
  std::vector<double> data_;
};

LowerTriangular operator+(const LowerTriangular& a, const LowerTriangular& b);
LowerTriangular operator-(const LowerTriangular& a, const LowerTriangular& b);
LowerTriangular operator-(const LowerTriangular& a);
LowerTriangular operator*(double s, const LowerTriangular& a);

/// Lower times lower; the product stays lower triangular.
LowerTriangular multiply(const LowerTriangular& a, const LowerTriangular& b);

double frobenius_inner(const LowerTriangular& a, const LowerTriangular& b);
double frobenius_norm(const LowerTriangular& a);

/// Element of the Cholesky space: lower triangular with a strictly positive
/// diagonal.
class CholeskyFactor {
 public:
  /// Throws DomainError unless every diagonal entry exceeds
  /// kPositivityTolerance.
  explicit CholeskyFactor(LowerTriangular lower);

  static CholeskyFactor identity(std::size_t dim);

  const LowerTriangular& lower() const noexcept { return lower_; }
  operator const LowerTriangular&() const noexcept { return lower_; }

  std::size_t dim() const noexcept { return lower_.dim(); }
  double operator()(std::size_t i, std::size_t j) const noexcept { return lower_(i, j); }
  double diag(std::size_t j) const noexcept { return lower_.diag(j); }
  std::span<const double> packed() const noexcept { return lower_.packed(); }
  Eigen::MatrixXd to_dense() const { return lower_.to_dense(); }

  friend bool operator==(const CholeskyFactor&, const CholeskyFactor&) = default;

 private:
  LowerTriangular lower_;
};

/// Symmetric m x m matrix, one triangle stored. Doubles as the tangent space
/// of the SPD manifold.
class SymMatrix {
 public:
  explicit SymMatrix(std::size_t dim);
  SymMatrix(std::size_t dim, std::vector<double> packed);

  static SymMatrix identity(std::size_t dim);
  static SymMatrix diagonal(std::span<const double> diag);
  /// Rejects matrices whose two triangles differ by more than 1e-12 relative.
  static SymMatrix from_dense(const Eigen::MatrixXd& a);
  /// Uses (A + A^T) / 2 of an arbitrary square matrix.
  static SymMatrix symmetrize(const Eigen::MatrixXd& a);

  std::size_t dim() const noexcept { return dim_; }
  double operator()(std::size_t i, std::size_t j) const noexcept {
    return j > i ? data_[packed_index(j, i)] : data_[packed_index(i, j)];
  }
  double diag(std::size_t j) const noexcept { return data_[packed_index(j, j)]; }
  std::span<const double> packed() const noexcept { return data_; }

  Eigen::MatrixXd to_dense() const;

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<double> data_;
};

using SymTangent = SymMatrix;

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b);
SymMatrix operator-(const SymMatrix& a, const SymMatrix& b);
SymMatrix operator*(double s, const SymMatrix& a);

/// Full Frobenius inner product (off-diagonal entries counted twice).
double frobenius_inner(const SymMatrix& a, const SymMatrix& b);
double frobenius_norm(const SymMatrix& a);

/// L L^T of any lower triangular L.
SymMatrix gram(const LowerTriangular& l);

/// Symmetric positive definite matrix. Construction runs the Cholesky
/// factorization, which doubles as the SPD test, and keeps the factor.
class SpdMatrix {
 public:
  /// Throws NotSpd if a pivot is not positive and finite.
  explicit SpdMatrix(SymMatrix s);
  /// P = L L^T; the given factor is kept as is.
  static SpdMatrix from_factor(CholeskyFactor l);
  static SpdMatrix identity(std::size_t dim);
  static SpdMatrix from_dense(const Eigen::MatrixXd& a) { return SpdMatrix(SymMatrix::from_dense(a)); }

  const SymMatrix& sym() const noexcept { return sym_; }
  operator const SymMatrix&() const noexcept { return sym_; }
  const CholeskyFactor& factor() const noexcept { return factor_; }

  std::size_t dim() const noexcept { return sym_.dim(); }
  double operator()(std::size_t i, std::size_t j) const noexcept { return sym_(i, j); }
  Eigen::MatrixXd to_dense() const { return sym_.to_dense(); }

 private:
  SpdMatrix(SymMatrix s, CholeskyFactor l) : sym_(std::move(s)), factor_(std::move(l)) {}

  SymMatrix sym_;
  CholeskyFactor factor_;
};

// Elementwise operators.

/// Strictly lower triangular part (zero diagonal).
LowerTriangular strict_lower(const LowerTriangular& a);
LowerTriangular strict_lower(const SymMatrix& a);
/// Diagonal part.
LowerTriangular diag_part(const LowerTriangular& a);
LowerTriangular diag_part(const SymMatrix& a);
/// strict_lower(S) + diag_part(S) / 2.
LowerTriangular half_lower(const SymMatrix& s);
/// exp / log applied to the diagonal entries; the strict lower part of the
/// argument is ignored and the result is diagonal. diag_log throws
/// DomainError on a non-positive entry.
LowerTriangular diag_exp(const LowerTriangular& d);
LowerTriangular diag_log(const LowerTriangular& d);
/// Product of the diagonal.
double tri_det(const LowerTriangular& l);
/// det(P) = det(L)^2 through the stored factor.
double det(const SpdMatrix& p);
/// log det(P) = 2 sum log L_jj, without forming the product.
double log_det(const SpdMatrix& p);

void require_same_dim(std::size_t a, std::size_t b, const char* what);

}  // namespace logchol

#endif  // LOGCHOL_TRI_CORE_HPP
