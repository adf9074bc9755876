#include "chebrate/model.hpp"

#include <cmath>
#include <utility>

#include "chebrate/errors.hpp"

namespace chebrate {

bool near_integer(double v) { return std::abs(v - std::round(v)) <= 1e-12; }

ModelFunction::ModelFunction(double xi, double alpha, RealFunction g, RealFunction g_prime,
                             std::string g_name)
    : xi_(xi), alpha_(alpha), g_(std::move(g)), g_prime_(std::move(g_prime)),
      g_name_(std::move(g_name)) {
  if (!(xi >= -1.0 && xi <= 1.0)) throw InvalidModel("xi must lie in [-1, 1]");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw InvalidModel("alpha must be positive");
  if (!g_ || !g_prime_) throw InvalidModel("g and g' must both be supplied");
  if (endpoint_singularity()) {
    if (near_integer(alpha)) throw InvalidModel("alpha must not be an integer when xi = +-1");
  } else if (near_integer(alpha / 2.0)) {
    throw InvalidModel("alpha must not be an even integer when xi is interior");
  }
}

double ModelFunction::evaluate(double x) const {
  return std::pow(std::abs(x - xi_), alpha_) * g_(x);
}

double ModelFunction::derivative(double x) const {
  const double d = x - xi_;
  if (d == 0.0) {
    if (alpha_ <= 1.0) throw DomainError("f' undefined at the singularity for alpha <= 1");
    return 0.0;
  }
  const double ad = std::abs(d);
  const double sign = d > 0.0 ? 1.0 : -1.0;
  return alpha_ * sign * std::pow(ad, alpha_ - 1.0) * g_(x) + std::pow(ad, alpha_) * g_prime_(x);
}

RealFunction ModelFunction::as_function() const {
  return [m = *this](double x) { return m.evaluate(x); };
}

ModelFunction make_model(double xi, double alpha, const std::string& g_name) {
  if (g_name == "exp") {
    return {xi, alpha, [](double x) { return std::exp(x); }, [](double x) { return std::exp(x); },
            g_name};
  }
  if (g_name == "sin-exp") {
    return {xi, alpha, [](double x) { return std::exp(std::sin(x)); },
            [](double x) { return std::cos(x) * std::exp(std::sin(x)); }, g_name};
  }
  if (g_name == "inv-3-minus-x") {
    return {xi, alpha, [](double x) { return 1.0 / (3.0 - x); },
            [](double x) { return 1.0 / ((3.0 - x) * (3.0 - x)); }, g_name};
  }
  if (g_name == "one") {
    return {xi, alpha, [](double) { return 1.0; }, [](double) { return 0.0; }, g_name};
  }
  throw InvalidModel("unknown g '" + g_name + "'");
}

const std::vector<std::string>& g_registry() {
  static const std::vector<std::string> names{"exp", "sin-exp", "inv-3-minus-x", "one"};
  return names;
}

}  // namespace chebrate
