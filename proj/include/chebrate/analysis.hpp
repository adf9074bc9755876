#pragma once

#include <cstddef>
#include <vector>

#include "chebrate/basis.hpp"
#include "chebrate/model.hpp"

namespace chebrate {

struct PhiAngles {
  double phi_plus;
  double phi_minus;
};

/// phi^+- = (arccos x +- arccos xi) / 2.
[[nodiscard]] PhiAngles phi_angles(double x, double xi);

/// Leading asymptotic term of f(x) - f_n(x) for the Chebyshev projection (n >= 2).
[[nodiscard]] double predict_pointwise(const ModelFunction& m, std::size_t n, double x);

/// lim n^alpha ||f - f_n|| for f = |x|^alpha: 2 Gamma(alpha) |sin(alpha pi / 2)| / pi.
[[nodiscard]] double max_error_limit(double alpha);

struct SuperconvSet {
  std::vector<double> points;
  std::vector<double> residuals;
  double eps = 0.0;
  std::vector<double> filtered;
};

/// U_2n(cos phi^+) + U_2n(cos phi^-) at x = cos(theta), evaluated from the angle.
[[nodiscard]] double superconv_condition(double theta, double xi, std::size_t n);

/// Roots in [-1, 1] of the interior superconvergence condition, ascending.
///
/// Scans 20n+1 second-kind points (uniform in theta) and bisects each sign change
/// in theta, both in long double. Residuals are evaluated at the final angle.
/// `filtered` keeps the roots with |y - xi| >= eps and residual <= 1e-10.
[[nodiscard]] SuperconvSet superconv_interior(const ModelFunction& m, std::size_t n,
                                              double eps = 0.1);
[[nodiscard]] SuperconvSet superconv_interior(double xi, std::size_t n, double eps = 0.1);

/// y_j = xi cos(2 pi j / (2n+1)), j = 1..n, in order of j, for xi = +-1.
/// Residuals are V_n(y_j) (xi = -1) or W_n(y_j) (xi = 1). `filtered` keeps
/// j >= max(1, n_eps).
[[nodiscard]] SuperconvSet superconv_endpoint(double xi, std::size_t n, double eps);

/// floor((2n+1)/(2 pi) arccos(1 - eps)).
[[nodiscard]] std::size_t endpoint_cutoff(std::size_t n, double eps);

/// f'(x) - f_n'(x) with f_n built from quadrature coefficients at tol (alpha > 1).
[[nodiscard]] double diff_error(const ModelFunction& m, std::size_t n, double x, double tol);

/// f'(x) - s'(x) for a given projection series s.
[[nodiscard]] double diff_error(const ModelFunction& m, const ChebSeries& derivative, double x);

enum class RateMethod {
  cheb_projection,
  legendre_projection,
  interp_first,
  interp_second,
  minimax,
  diff
};
enum class XiKind { interior, endpoint };
/// Where the error is measured. `at_endpoints` means x = +-1 for interior xi
/// and x = -xi for endpoint xi. `max_norm` is the maximum over [-1, 1].
enum class Region {
  at_singularity,
  near_singularity,
  at_endpoints,
  generic,
  superconvergence,
  max_norm
};

/// Predicted decay exponent beta = c_alpha * alpha + c_1 in O(n^-beta).
struct RateExponent {
  double c_alpha;
  double c_1;
  [[nodiscard]] double beta(double alpha) const { return c_alpha * alpha + c_1; }
};

/// Throws UnsupportedError for combinations without a known rate.
[[nodiscard]] RateExponent rate_table(RateMethod method, XiKind xi_kind, Region region);

[[nodiscard]] XiKind xi_kind_of(const ModelFunction& m);

struct RateFit {
  std::vector<double> ns;
  std::vector<double> errors;
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

/// Least squares line through (log n, log err); >= 4 points, ns increasing, errs > 0.
[[nodiscard]] RateFit fit_rate(const std::vector<double>& ns, const std::vector<double>& errs);

/// fit_rate, dropping the smallest n while r2 < r2_min and more than 4 points remain.
[[nodiscard]] RateFit fit_rate_trimmed(const std::vector<double>& ns,
                                       const std::vector<double>& errs, double r2_min = 0.98);

/// Degrees n, n+s, ... below 1.5n with s = max(1, n/32). The maximum of an
/// oscillating pointwise error over this window tracks its envelope.
[[nodiscard]] std::vector<std::size_t> envelope_window(std::size_t n);

/// Dyadic degrees lo, 2 lo, ..., <= hi.
[[nodiscard]] std::vector<std::size_t> dyadic(std::size_t lo, std::size_t hi);

}  // namespace chebrate
