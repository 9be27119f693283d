#pragma once

#include <stdexcept>
#include <string>

namespace coxhyp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A well-formed value that violates an operation's precondition
/// (asymmetric matrix, non positive definite pivot block, index out of range).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Enumeration guard tripped (rank too large, group too large).
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace coxhyp
