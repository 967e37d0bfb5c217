#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace toda2 {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Matrix order out of range for a builder (e.g. sl(n) with n < 2).
class InvalidOrder : public Error {
public:
  using Error::Error;
};

/// Operands that do not belong to the same algebra (dimension mismatch).
class AlgebraMismatch : public Error {
public:
  using Error::Error;
};

/// Algebra-spec document could not be parsed.
class ParseError : public Error {
public:
  using Error::Error;
};

/// An algebra invariant failed. Carries the invariant name and the
/// offending basis indices.
class ValidationError : public Error {
public:
  ValidationError(std::string invariant, std::vector<int> indices, const std::string& what)
      : Error(what), invariant_(std::move(invariant)), indices_(std::move(indices)) {}

  const std::string& invariant() const noexcept { return invariant_; }
  const std::vector<int>& indices() const noexcept { return indices_; }

private:
  std::string invariant_;
  std::vector<int> indices_;
};

/// Operation needs a structure the algebra does not have (quadratic
/// bracket on a non-associative algebra).
class CapabilityError : public Error {
public:
  using Error::Error;
};

/// Operation called outside its precondition.
class PreconditionError : public Error {
public:
  using Error::Error;
};

}  // namespace toda2
