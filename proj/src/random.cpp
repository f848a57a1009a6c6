#include "logchol/random.hpp"

#include "logchol/errors.hpp"

#include <Eigen/QR>

#include <cmath>
#include <vector>

namespace logchol {

Eigen::MatrixXd random_gaussian(std::size_t m, Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const auto k = static_cast<Eigen::Index>(m);
  Eigen::MatrixXd a(k, k);
  // Row-major fill order keeps draws independent of Eigen's storage order.
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) a(i, j) = n(rng);
  }
  return a;
}

Eigen::MatrixXd random_orthogonal(std::size_t m, Rng& rng) {
  const Eigen::MatrixXd a = random_gaussian(m, rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    if (r(j, j) < 0.0) q.col(j) *= -1.0;
  }
  return q;
}

SpdMatrix random_spd(std::size_t m, Rng& rng, double delta) {
  const Eigen::MatrixXd a = random_gaussian(m, rng);
  Eigen::MatrixXd p = a * a.transpose();
  p.diagonal().array() += delta;
  return SpdMatrix(SymMatrix::symmetrize(p));
}

SpdMatrix ill_conditioned_spd(std::size_t m, double kappa, Rng& rng) {
  if (!(kappa >= 1.0)) throw InvalidValue("ill_conditioned_spd: kappa must be >= 1");
  const Eigen::MatrixXd r = random_orthogonal(m, rng);
  Eigen::VectorXd d(static_cast<Eigen::Index>(m));
  for (std::size_t i = 0; i < m; ++i) {
    const double frac = m == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(m - 1);
    d(static_cast<Eigen::Index>(i)) = std::pow(kappa, -frac);
  }
  return SpdMatrix(SymMatrix::symmetrize(r * d.asDiagonal() * r.transpose()));
}

CholeskyFactor random_factor(std::size_t m, Rng& rng, double diag_spread) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<double> data(packed_size(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < i; ++j) data[packed_index(i, j)] = n(rng);
    data[packed_index(i, i)] = std::exp(diag_spread * n(rng));
  }
  return CholeskyFactor(LowerTriangular(m, std::move(data)));
}

LowerTriangular random_lower(std::size_t m, Rng& rng, double scale) {
  std::normal_distribution<double> n(0.0, scale);
  std::vector<double> data(packed_size(m));
  for (double& v : data) v = n(rng);
  return LowerTriangular(m, std::move(data));
}

SymMatrix random_sym(std::size_t m, Rng& rng, double scale) {
  std::normal_distribution<double> n(0.0, scale);
  std::vector<double> data(packed_size(m));
  for (double& v : data) v = n(rng);
  return SymMatrix(m, std::move(data));
}

}  // namespace logchol
