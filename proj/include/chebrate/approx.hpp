#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chebrate/basis.hpp"
#include "chebrate/model.hpp"

namespace chebrate {

enum class Method { cheb_projection, legendre_projection, interp_first, interp_second, minimax };

[[nodiscard]] std::string to_string(Method m);
[[nodiscard]] Method method_from_string(const std::string& s);

/// Construction parameters recorded with an approximant (tol, node counts, ...).
using Provenance = std::map<std::string, double>;

/// A degree-n polynomial approximation on [-1, 1].
///
/// Coefficients are effective Chebyshev coefficients for every method except
/// legendre_projection, where they are the Legendre coefficients a^L_k.
class Approximant {
 public:
  Approximant(Method method, std::vector<double> coeffs, Provenance provenance = {});

  [[nodiscard]] Method method() const noexcept { return method_; }
  [[nodiscard]] std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  [[nodiscard]] std::span<const double> coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] const Provenance& provenance() const noexcept { return provenance_; }
  [[nodiscard]] bool is_legendre() const noexcept { return method_ == Method::legendre_projection; }

  /// The Chebyshev series; UnsupportedError for Legendre approximants.
  [[nodiscard]] ChebSeries cheb_series() const;

  [[nodiscard]] double operator()(double x) const;

 private:
  Method method_;
  std::vector<double> coeffs_;
  Provenance provenance_;
};

[[nodiscard]] double eval_approximant(const Approximant& a, double x);

/// f_n from quadrature coefficients (a_0 halved).
[[nodiscard]] Approximant cheb_projection(const ModelFunction& m, std::size_t n, double tol);

/// f_n for several degrees from one table of raw coefficients a_0..a_K (K >= n).
[[nodiscard]] Approximant cheb_projection_from_raw(std::span<const double> raw, std::size_t n,
                                                   Provenance provenance = {});

[[nodiscard]] Approximant legendre_projection(const ModelFunction& m, std::size_t n, double tol);

[[nodiscard]] Approximant legendre_projection_from_raw(std::span<const double> raw, std::size_t n,
                                                       Provenance provenance = {});

/// Interpolant at the n+1 first-kind points, coefficients by direct discrete sums.
[[nodiscard]] Approximant interp_first(const RealFunction& f, std::size_t n);

/// Interpolant at the n+1 second-kind points (n >= 1).
[[nodiscard]] Approximant interp_second(const RealFunction& f, std::size_t n);

/// Raw (unhalved) first-kind interpolation coefficients b_0..b_kmax for N+1 points.
/// With large N these approximate the Chebyshev coefficients a_k.
[[nodiscard]] std::vector<double> interp_first_raw(const RealFunction& f, std::size_t big_n,
                                                   std::size_t kmax);

struct AliasFirst {
  std::size_t eta;
  int sign;
};

/// Alias target eta(k) and sign nu(k) of mode k >= n+1 on n+1 first-kind points.
[[nodiscard]] AliasFirst alias_index_first(std::size_t k, std::size_t n);

/// Alias target psi(k) of mode k >= n+1 on n+1 second-kind points.
[[nodiscard]] std::size_t alias_index_second(std::size_t k, std::size_t n);

/// Max-norm measurement grid: `points` second-kind points, both endpoints and xi.
[[nodiscard]] std::vector<double> measurement_grid(std::size_t points = 10001,
                                                   std::optional<double> xi = std::nullopt);

/// max_x |f(x) - a(x)| over the grid.
[[nodiscard]] double max_error(const RealFunction& f, const Approximant& a,
                               std::span<const double> grid);

/// 4 + (4/pi^2) log n, the Lebesgue-constant factor between f_n and the best approximation.
[[nodiscard]] double lebesgue_factor(std::size_t n);

}  // namespace chebrate
