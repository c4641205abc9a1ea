#pragma once

#include <stdexcept>
#include <string>

namespace gkz {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input (JSON shape, bad rational literal, invalid structure).
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Operands of incompatible sizes.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A search exceeded its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A computation needed a degree above the configured bound.
class DegreeBoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace gkz
