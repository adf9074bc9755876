#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chebrate {

/// Argument outside the domain of an evaluation (e.g. |x| > 1).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Model function parameters that violate the admissibility rules.
class InvalidModel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Combination of inputs for which no formula is available.
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Quadrature could not reach the requested tolerance.
class ToleranceError : public std::runtime_error {
 public:
  ToleranceError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}
  [[nodiscard]] double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

/// An iterative summation stopped before reaching its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_estimate, double error_bound)
      : std::runtime_error(what), best_(best_estimate), bound_(error_bound) {}
  [[nodiscard]] double best_estimate() const noexcept { return best_; }
  [[nodiscard]] double error_bound() const noexcept { return bound_; }

 private:
  double best_;
  double bound_;
};

/// The Remez linear system is numerically singular.
class SingularSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An equioscillation certificate does not hold.
class CertificateError : public std::runtime_error {
 public:
  CertificateError(const std::string& what, std::size_t index)
      : std::runtime_error(what), index_(index) {}
  /// Index of the first reference point where alternation fails.
  [[nodiscard]] std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace chebrate
