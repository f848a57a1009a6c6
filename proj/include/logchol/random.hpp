#ifndef LOGCHOL_RANDOM_HPP
#define LOGCHOL_RANDOM_HPP

// Seeded generators for test and experiment inputs.

#include "logchol/tri_core.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <random>

namespace logchol {

using Rng = std::mt19937_64;

Eigen::MatrixXd random_gaussian(std::size_t m, Rng& rng);
/// Haar-distributed orthogonal matrix (QR of a Gaussian matrix, signs fixed).
Eigen::MatrixXd random_orthogonal(std::size_t m, Rng& rng);

/// A A^T + delta I, A with standard normal entries.
SpdMatrix random_spd(std::size_t m, Rng& rng, double delta = 1e-3);
/// R diag(1, ..., 1/kappa) R^T with log-spaced eigenvalues and random
/// orthogonal R.
SpdMatrix ill_conditioned_spd(std::size_t m, double kappa, Rng& rng);

/// Strict lower entries ~ N(0, 1), diagonal exp(N(0, diag_spread^2)).
CholeskyFactor random_factor(std::size_t m, Rng& rng, double diag_spread = 0.5);
/// Entries ~ N(0, scale^2).
LowerTriangular random_lower(std::size_t m, Rng& rng, double scale = 1.0);
SymMatrix random_sym(std::size_t m, Rng& rng, double scale = 1.0);

}  // namespace logchol

#endif  // LOGCHOL_RANDOM_HPP
