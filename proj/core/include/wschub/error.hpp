#pragma once

#include <stdexcept>
#include <string>

namespace wschub {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the parameters was violated (bad n, d, weights, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed the configured vertex cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Two operands live in different variable contexts.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

/// A division that must be exact left a remainder. Never expected on a
/// correct build; it flags an inconsistency in upstream data.
class InexactDivision : public Error {
 public:
  using Error::Error;
};

}  // namespace wschub
