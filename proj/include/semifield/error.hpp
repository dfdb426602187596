#ifndef SEMIFIELD_ERROR_HPP
#define SEMIFIELD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace semifield {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter violates the mathematical domain of an operation
/// (a in F, eta = 0, non-prime characteristic, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed element or polynomial text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A search or table would exceed the configured size bound.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed (a map that should be
/// multiplicative is not, a set that should be a group is not closed, ...).
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace semifield

#endif  // SEMIFIELD_ERROR_HPP
