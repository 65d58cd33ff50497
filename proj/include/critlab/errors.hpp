#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace critlab {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDimension : public Error {
 public:
  using Error::Error;
};

class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// A polynomial whose derivative measure would be empty (degree too small).
class DegenerateResult : public Error {
 public:
  using Error::Error;
};

class PoleProximity : public Error {
 public:
  using Error::Error;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

/// Eigenvalue iteration ran out of budget.
class NumericFailure : public Error {
 public:
  NumericFailure(const std::string& what, std::size_t dim)
      : Error(what + " (dim=" + std::to_string(dim) + ")"), dim_(dim) {}

  std::size_t dim() const noexcept { return dim_; }

 private:
  std::size_t dim_;
};

}  // namespace critlab
