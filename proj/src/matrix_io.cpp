#include "logchol/matrix_io.hpp"

#include "logchol/errors.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace logchol {
namespace {

// Next line that is neither blank nor a comment; false at end of input.
bool next_content_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

std::string where(std::size_t lineno) { return "line " + std::to_string(lineno) + ": "; }

}  // namespace

std::vector<Eigen::MatrixXd> read_dense_blocks(std::istream& in) {
  std::vector<Eigen::MatrixXd> blocks;
  std::string line;
  std::size_t lineno = 0;
  while (next_content_line(in, line, lineno)) {
    std::istringstream header(line);
    long long m = 0;
    std::string trailing;
    if (!(header >> m) || (header >> trailing) || m <= 0) {
      throw ParseError(where(lineno) + "expected a positive dimension, got '" + line + "'");
    }
    Eigen::MatrixXd a(m, m);
    for (long long i = 0; i < m; ++i) {
      if (!next_content_line(in, line, lineno)) {
        throw ParseError(where(lineno) + "unexpected end of input inside a " + std::to_string(m) +
                         "x" + std::to_string(m) + " block");
      }
      std::istringstream row(line);
      for (long long j = 0; j < m; ++j) {
        std::string token;
        if (!(row >> token)) throw ParseError(where(lineno) + "row has fewer than m entries");
        try {
          std::size_t used = 0;
          a(i, j) = std::stod(token, &used);
          if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
          throw ParseError(where(lineno) + "not a number: '" + token + "'");
        }
        if (!std::isfinite(a(i, j))) throw ParseError(where(lineno) + "non-finite entry");
      }
      if (row >> trailing) throw ParseError(where(lineno) + "row has more than m entries");
    }
    blocks.push_back(std::move(a));
  }
  return blocks;
}

std::vector<Eigen::MatrixXd> read_dense_blocks_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_dense_blocks(in);
}

std::vector<SymMatrix> read_sym_blocks(std::istream& in) {
  std::vector<SymMatrix> out;
  for (const auto& a : read_dense_blocks(in)) {
    try {
      out.push_back(SymMatrix::from_dense(a));
    } catch (const InvalidValue& e) {
      throw ParseError("block " + std::to_string(out.size()) + ": " + e.what());
    }
  }
  return out;
}

std::vector<SpdMatrix> read_spd_blocks(std::istream& in) {
  std::vector<SpdMatrix> out;
  for (auto& s : read_sym_blocks(in)) out.emplace_back(std::move(s));
  return out;
}

std::vector<SpdMatrix> read_spd_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_spd_blocks(in);
}

std::vector<LowerTriangular> read_lower_blocks(std::istream& in) {
  std::vector<LowerTriangular> out;
  for (const auto& a : read_dense_blocks(in)) {
    try {
      out.push_back(LowerTriangular::from_dense(a));
    } catch (const InvalidValue& e) {
      throw ParseError("block " + std::to_string(out.size()) + ": " + e.what());
    }
  }
  return out;
}

void write_block(std::ostream& out, const Eigen::MatrixXd& a) {
  const auto old_precision = out.precision(std::numeric_limits<double>::max_digits10);
  out << a.rows() << '\n';
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out << (j ? " " : "") << a(i, j);
    out << '\n';
  }
  out.precision(old_precision);
}

void write_block(std::ostream& out, const SymMatrix& a) { write_block(out, a.to_dense()); }
void write_block(std::ostream& out, const LowerTriangular& a) { write_block(out, a.to_dense()); }

}  // namespace logchol
