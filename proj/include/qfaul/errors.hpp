#pragma once

#include <stdexcept>
#include <string>

namespace qfaul {

struct NotDivisible : std::domain_error {
  explicit NotDivisible(const std::string &what) : std::domain_error(what) {}
};

struct DivideByZero : std::domain_error {
  explicit DivideByZero(const std::string &what) : std::domain_error(what) {}
};

struct NegativeCoefficient : std::domain_error {
  explicit NegativeCoefficient(const std::string &what)
      : std::domain_error(what) {}
};

/// An (m, k) pair outside the range where a coefficient polynomial is defined.
struct BadIndex : std::out_of_range {
  explicit BadIndex(const std::string &what) : std::out_of_range(what) {}
};

/// A rational sample point at which some denominator of the checked identity
/// vanishes.
struct SingularSample : std::domain_error {
  explicit SingularSample(const std::string &what) : std::domain_error(what) {}
};

struct DimensionMismatch : std::invalid_argument {
  explicit DimensionMismatch(const std::string &what)
      : std::invalid_argument(what) {}
};

} // namespace qfaul
