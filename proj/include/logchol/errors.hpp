#ifndef LOGCHOL_ERRORS_HPP
#define LOGCHOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace logchol {

/// Argument outside the domain of an elementwise function (e.g. log of a
/// non-positive diagonal entry).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Cholesky factorization hit a non-positive or non-finite pivot.
class NotSpd : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidValue : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EmptyInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EigFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace logchol

#endif  // LOGCHOL_ERRORS_HPP
