#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "logchol/chol_map.hpp"
#include "logchol/errors.hpp"
#include "logchol/random.hpp"
#include "logchol/tri_core.hpp"
#include "test_support.hpp"

namespace logchol {
namespace {

using test::dense;
using test::lower;

TEST(PackedLayout, IndexIsRowMajorLower) {
  EXPECT_EQ(packed_index(0, 0), 0u);
  EXPECT_EQ(packed_index(1, 0), 1u);
  EXPECT_EQ(packed_index(1, 1), 2u);
  EXPECT_EQ(packed_index(2, 0), 3u);
  EXPECT_EQ(packed_index(3, 3), 9u);
  EXPECT_EQ(packed_size(4), 10u);
}

TEST(LowerTriangular, RejectsWrongLengthAndNonFinite) {
  EXPECT_THROW(LowerTriangular(2, {1.0, 2.0}), InvalidValue);
  EXPECT_THROW(LowerTriangular(2, {1.0, std::nan(""), 2.0}), InvalidValue);
  EXPECT_THROW(LowerTriangular(2, {1.0, std::numeric_limits<double>::infinity(), 2.0}),
               InvalidValue);
}

TEST(LowerTriangular, FromDenseRejectsUpperEntries) {
  EXPECT_THROW(LowerTriangular::from_dense(dense({{1, 1e-9}, {0, 1}})), InvalidValue);
}

TEST(LowerTriangular, DenseRoundTrip) {
  const auto a = dense({{3, 0, 0}, {5, 7, 0}, {-1, 2, 4}});
  EXPECT_EQ(LowerTriangular::from_dense(a).to_dense(), a);
}

TEST(CholeskyFactor, RequiresPositiveDiagonal) {
  EXPECT_THROW(CholeskyFactor(lower({{1, 0}, {0, 0}})), DomainError);
  EXPECT_THROW(CholeskyFactor(lower({{-1, 0}, {0, 1}})), DomainError);
  EXPECT_NO_THROW(CholeskyFactor(lower({{1e-200, 0}, {3, 1}})));
}

TEST(SymMatrix, FromDenseChecksSymmetry) {
  EXPECT_THROW(SymMatrix::from_dense(dense({{1, 2}, {3, 1}})), InvalidValue);
  const auto s = SymMatrix::symmetrize(dense({{1, 2}, {4, 1}}));
  EXPECT_EQ(s(0, 1), 3.0);
  EXPECT_EQ(s(1, 0), 3.0);
}

TEST(SymMatrix, FrobeniusCountsOffDiagonalTwice) {
  const auto s = test::sym({{1, 2}, {2, 3}});
  EXPECT_DOUBLE_EQ(frobenius_inner(s, s), s.to_dense().squaredNorm());
}

TEST(SpdMatrix, FactorizationIsTheSpdTest) {
  EXPECT_THROW(test::spd({{1, 2}, {2, 1}}), NotSpd);
  EXPECT_THROW(test::spd({{0, 0}, {0, 1}}), NotSpd);
  const auto p = test::spd({{4, 2}, {2, 5}});
  EXPECT_EQ(p.factor().to_dense(), dense({{2, 0}, {1, 2}}));
}

TEST(StrictLower, Examples) {
  EXPECT_EQ(strict_lower(lower({{2, 0}, {1, 2}})), lower({{0, 0}, {1, 0}}));
  EXPECT_EQ(strict_lower(LowerTriangular::identity(2)), LowerTriangular(2));
  EXPECT_EQ(strict_lower(lower({{3, 0}, {5, 7}})), lower({{0, 0}, {5, 0}}));
  EXPECT_EQ(strict_lower(test::sym({{3, 5}, {5, 7}})), lower({{0, 0}, {5, 0}}));
}

TEST(DiagPart, Examples) {
  EXPECT_EQ(diag_part(lower({{2, 0}, {1, 2}})), lower({{2, 0}, {0, 2}}));
  EXPECT_EQ(diag_part(LowerTriangular(2)), LowerTriangular(2));
  EXPECT_EQ(diag_part(lower({{1, 0}, {0, 5}})), lower({{1, 0}, {0, 5}}));
  EXPECT_EQ(diag_part(test::sym({{3, 5}, {5, 7}})), lower({{3, 0}, {0, 7}}));
}

TEST(HalfLower, Examples) {
  EXPECT_EQ(half_lower(test::sym({{2, 4}, {4, 6}})), lower({{1, 0}, {4, 3}}));
  EXPECT_EQ(half_lower(SymMatrix::identity(2)), lower({{0.5, 0}, {0, 0.5}}));
  EXPECT_EQ(half_lower(SymMatrix(2)), LowerTriangular(2));
}

TEST(DiagExpLog, Examples) {
  EXPECT_EQ(diag_exp(LowerTriangular(2)), LowerTriangular::identity(2));
  const double e = std::exp(1.0);
  const auto l = diag_log(lower({{e, 0}, {0, e * e}}));
  EXPECT_NEAR(l(0, 0), 1.0, 1e-15);
  EXPECT_NEAR(l(1, 1), 2.0, 1e-15);
  const auto d = lower({{-3.7, 0}, {0, 0.2}});
  const auto back = diag_log(diag_exp(d));
  EXPECT_NEAR(back(0, 0), -3.7, 1e-14);
  EXPECT_NEAR(back(1, 1), 0.2, 1e-14);
}

TEST(DiagExpLog, IgnoresStrictLowerPart) {
  const auto r = diag_exp(lower({{0, 0}, {9, 0}}));
  EXPECT_EQ(r, LowerTriangular::identity(2));
}

TEST(DiagLog, RejectsNonPositive) {
  EXPECT_THROW(diag_log(lower({{1, 0}, {0, 0}})), DomainError);
  EXPECT_THROW(diag_log(lower({{-2, 0}, {0, 1}})), DomainError);
}

TEST(TriDet, Examples) {
  EXPECT_EQ(tri_det(lower({{2, 0}, {1, 2}})), 4.0);
  EXPECT_EQ(tri_det(LowerTriangular::identity(4)), 1.0);
  EXPECT_EQ(tri_det(lower({{0.1, 0}, {0, 1}})), 0.1);
}

TEST(Det, MatchesEigenDeterminant) {
  Rng rng(7);
  for (int k = 0; k < 20; ++k) {
    const auto p = random_spd(4, rng);
    const double ref = p.to_dense().determinant();
    EXPECT_LT(std::abs(det(p) - ref) / ref, 1e-10);
    EXPECT_NEAR(log_det(p), std::log(ref), 1e-10);
  }
}

TEST(TriCoreProperties, DecompositionIsExact) {
  Rng rng(11);
  for (std::size_t m : test::property_dims()) {
    const auto x = random_lower(m, rng);
    EXPECT_EQ(strict_lower(x) + diag_part(x), x);
  }
}

TEST(TriCoreProperties, DiagonalPartIsMultiplicative) {
  Rng rng(12);
  for (int k = 0; k < 50; ++k) {
    const auto x = random_lower(5, rng);
    const auto y = random_lower(5, rng);
    const Eigen::MatrixXd prod = x.to_dense() * y.to_dense();
    const auto lhs = diag_part(multiply(x, y));
    const auto rhs = multiply(diag_part(x), diag_part(y));
    EXPECT_LT((lhs.to_dense() - rhs.to_dense()).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_LT((multiply(x, y).to_dense() - prod).norm(), 1e-12 * std::max(1.0, prod.norm()));
  }
}

TEST(TriCoreProperties, DiagonalOfInverseIsInverseOfDiagonal) {
  Rng rng(13);
  for (int k = 0; k < 50; ++k) {
    const auto l = random_factor(5, rng);
    const Eigen::MatrixXd inv = l.to_dense().triangularView<Eigen::Lower>().solve(
        Eigen::MatrixXd::Identity(5, 5));
    for (std::size_t j = 0; j < 5; ++j) {
      const double ref = 1.0 / l.diag(j);
      EXPECT_LT(std::abs(inv(j, j) - ref) / ref, 1e-12);
    }
  }
}

TEST(TriCoreProperties, HalfLowerPlusTransposeRebuildsSymmetric) {
  Rng rng(14);
  for (std::size_t m : test::property_dims()) {
    const auto s = random_sym(m, rng);
    const Eigen::MatrixXd h = half_lower(s).to_dense();
    EXPECT_EQ(Eigen::MatrixXd(h + h.transpose()), s.to_dense());
  }
}

TEST(Gram, MatchesDenseProduct) {
  Rng rng(15);
  const auto l = random_lower(6, rng);
  const Eigen::MatrixXd ref = l.to_dense() * l.to_dense().transpose();
  EXPECT_LT(test::rel_err(gram(l).to_dense(), ref), 1e-14);
}

TEST(RequireSameDim, Throws) {
  EXPECT_THROW(require_same_dim(2, 3, "x"), DimensionMismatch);
  EXPECT_THROW(LowerTriangular(2) + LowerTriangular(3), DimensionMismatch);
}

}  // namespace
}  // namespace logchol
