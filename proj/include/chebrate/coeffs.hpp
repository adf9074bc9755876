#pragma once

#include <cstddef>
#include <vector>

#include "chebrate/model.hpp"

namespace chebrate {

/// Constants of the large-k coefficient asymptotics of a model function.
///
/// Interior singularity: i1, i2 (Chebyshev) and e, lambda1, lambda2 (Legendre).
/// Endpoint singularity: b (Chebyshev) only. Unused fields are NaN.
struct AsymCoeff {
  bool endpoint = false;
  double i1;
  double i2;
  double b;
  double e;
  double lambda1;
  double lambda2;
};

[[nodiscard]] AsymCoeff asym_constants(const ModelFunction& m);

/// Quadrature values together with per-coefficient error estimates.
struct CoeffTable {
  std::vector<double> values;
  std::vector<double> errors;
};

/// Raw Chebyshev coefficients a_0..a_max_k, a_k = (2/pi) int_0^pi f(cos t) cos(k t) dt.
///
/// All coefficients share one singularity-graded panel mesh. The error estimate of
/// each coefficient is the difference between 32- and 20-point Gauss rules on that
/// mesh. Throws ToleranceError when an estimate exceeds tol (tol >= 1e-13).
[[nodiscard]] CoeffTable cheb_coeffs_quad(const ModelFunction& m, std::size_t max_k, double tol);

[[nodiscard]] double cheb_coeff_quad(const ModelFunction& m, std::size_t k, double tol);

/// Leading terms of the Chebyshev coefficient asymptotics (k >= 1).
[[nodiscard]] double cheb_coeff_asym(const ModelFunction& m, std::size_t k);

/// Legendre coefficients a^L_0..a^L_max_k, a^L_k = (2k+1)/2 int_{-1}^{1} f P_k dx,
/// integrated in x over panels split at xi.
[[nodiscard]] CoeffTable legendre_coeffs_quad(const ModelFunction& m, std::size_t max_k,
                                              double tol);

[[nodiscard]] double legendre_coeff_quad(const ModelFunction& m, std::size_t k, double tol);

/// Leading term of the Legendre coefficient asymptotics. Interior xi only;
/// UnsupportedError for xi = +-1.
[[nodiscard]] double legendre_coeff_asym(const ModelFunction& m, std::size_t k);

}  // namespace chebrate
