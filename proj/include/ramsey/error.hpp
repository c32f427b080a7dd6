#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition (non-prime characteristic,
/// inverse of zero, non-negation-closed partition, vertex out of range...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A coloring or certificate file could not be parsed or is inconsistent.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// An input witness handed to the composition contains a forbidden clique.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace ramsey
