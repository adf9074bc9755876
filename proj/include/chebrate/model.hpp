#pragma once

#include <functional>
#include <string>
#include <vector>

namespace chebrate {

using RealFunction = std::function<double(double)>;

/// f(x) = |x - xi|^alpha * g(x) on [-1, 1], one algebraic singularity at xi.
///
/// Admissible parameters: alpha > 0, not an even integer when xi is interior and
/// not an integer when xi = +-1. g and g' must be reentrant; the object is
/// immutable after construction and may be shared across threads.
class ModelFunction {
 public:
  ModelFunction(double xi, double alpha, RealFunction g, RealFunction g_prime,
                std::string g_name = "custom");

  [[nodiscard]] double xi() const noexcept { return xi_; }
  [[nodiscard]] double alpha() const noexcept { return alpha_; }
  [[nodiscard]] const std::string& g_name() const noexcept { return g_name_; }
  [[nodiscard]] bool endpoint_singularity() const noexcept { return xi_ == 1.0 || xi_ == -1.0; }

  [[nodiscard]] double g(double x) const { return g_(x); }
  [[nodiscard]] double g_prime(double x) const { return g_prime_(x); }

  [[nodiscard]] double operator()(double x) const { return evaluate(x); }
  [[nodiscard]] double evaluate(double x) const;

  /// f'(x). At x = xi this is the one-sided limit, 0 for alpha > 1; for
  /// alpha <= 1 the derivative does not exist there and DomainError is thrown.
  [[nodiscard]] double derivative(double x) const;

  /// Plain callable for APIs taking an arbitrary function.
  [[nodiscard]] RealFunction as_function() const;

 private:
  double xi_;
  double alpha_;
  RealFunction g_;
  RealFunction g_prime_;
  std::string g_name_;
};

/// Model with a named g from the built-in registry: "exp" (e^x), "sin-exp"
/// (e^{sin x}), "inv-3-minus-x" (1/(3-x)) and "one". InvalidModel for other names.
[[nodiscard]] ModelFunction make_model(double xi, double alpha, const std::string& g_name);

/// Names accepted by make_model.
[[nodiscard]] const std::vector<std::string>& g_registry();

/// True when |v - round(v)| <= 1e-12.
[[nodiscard]] bool near_integer(double v);

}  // namespace chebrate
