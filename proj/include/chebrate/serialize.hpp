#pragma once

#include <string>

#include "chebrate/approx.hpp"
#include "chebrate/remez.hpp"

namespace chebrate {

/// %.17g, with "nan", "inf" and "-inf" for non-finite values.
[[nodiscard]] std::string format_double(double v);

/// {"method", "n", "coeffs", "provenance"}; coefficients at 17 significant digits.
[[nodiscard]] std::string to_json(const Approximant& a);

/// Inverse of to_json(Approximant). Throws std::invalid_argument on malformed input.
[[nodiscard]] Approximant approximant_from_json(const std::string& text);

/// {"n", "coeffs", "reference", "h", "E", "iterations", "converged", "defect", "dlvp_lower"}.
[[nodiscard]] std::string to_json(const RemezResult& r);

}  // namespace chebrate
