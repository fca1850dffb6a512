#pragma once

#include <stdexcept>
#include <string>

namespace expsumlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (non-prime p, bad degree, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Elements of two different field or ring contexts were combined.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

/// The estimated enumeration work exceeds the configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A rational reconstruction could not be certified at the requested bounds.
class Uncertified : public Error {
 public:
  using Error::Error;
};

/// A job document does not match the schema of its command.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace expsumlab
