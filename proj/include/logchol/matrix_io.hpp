#ifndef LOGCHOL_MATRIX_IO_HPP
#define LOGCHOL_MATRIX_IO_HPP

// Text fixture format: one block per matrix. The first line holds the
// dimension m, followed by m lines of m whitespace-separated numbers (the full
// dense matrix). Blank lines and lines starting with '#' are skipped.
//
//   2
//   4 2
//   2 5

#include "logchol/tri_core.hpp"

#include <Eigen/Core>

#include <iosfwd>
#include <string>
#include <vector>

namespace logchol {

std::vector<Eigen::MatrixXd> read_dense_blocks(std::istream& in);
std::vector<Eigen::MatrixXd> read_dense_blocks_file(const std::string& path);

/// Each block must be symmetric.
std::vector<SymMatrix> read_sym_blocks(std::istream& in);
/// Each block must be symmetric and pass the Cholesky SPD test.
std::vector<SpdMatrix> read_spd_blocks(std::istream& in);
std::vector<SpdMatrix> read_spd_file(const std::string& path);
/// Each block must have zeros above the diagonal.
std::vector<LowerTriangular> read_lower_blocks(std::istream& in);

/// Writes with round-trip precision.
void write_block(std::ostream& out, const Eigen::MatrixXd& a);
void write_block(std::ostream& out, const SymMatrix& a);
void write_block(std::ostream& out, const LowerTriangular& a);

}  // namespace logchol

#endif  // LOGCHOL_MATRIX_IO_HPP
