#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lant {

/// Thrown when a Gram pivot falls below the rank tolerance. `column` is the
/// 1-based index of the candidate column whose elimination step failed.
class SingularDesignError : public std::runtime_error {
 public:
  SingularDesignError(const std::string& what, std::int64_t column)
      : std::runtime_error(what), column_(column) {}
  std::int64_t column() const noexcept { return column_; }

 private:
  std::int64_t column_;
};

/// Thrown when the eta-series prefactor 1/(1 - 2^(1-s)) has a pole at s.
class SingularPrefactorError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when a value that must round to {0, 1} misses by more than the
/// rounding tolerance.
class NumericalInconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lant
