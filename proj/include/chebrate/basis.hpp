#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace chebrate {

/// Finite Chebyshev series sum_k c_k T_k(x) over [-1, 1].
///
/// Coefficients are stored in *effective* form: whatever halving convention the
/// source formula uses (first term halved, or first and last halved) is folded in
/// at construction, so evaluation is always the plain sum.
class ChebSeries {
 public:
  ChebSeries() : coeffs_(1, 0.0) {}

  /// Coefficients already in effective form.
  static ChebSeries from_effective(std::vector<double> coeffs);
  /// Coefficients a_0..a_n of sum' a_k T_k (first term halved).
  static ChebSeries from_prime(std::vector<double> coeffs);
  /// Coefficients c_0..c_n of sum'' c_k T_k (first and last terms halved).
  static ChebSeries from_double_prime(std::vector<double> coeffs);

  [[nodiscard]] std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  [[nodiscard]] std::span<const double> coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] double operator[](std::size_t k) const { return coeffs_.at(k); }

  /// Clenshaw evaluation; throws DomainError for |x| > 1 + 1e-12.
  [[nodiscard]] double operator()(double x) const;

 private:
  explicit ChebSeries(std::vector<double> c);
  std::vector<double> coeffs_;
};

enum class PointKind { first, second };

/// Chebyshev points, always stored in ascending order.
struct PointSet {
  PointKind kind;
  std::size_t n;
  std::vector<double> nodes;
};

/// n+1 points cos((j+1/2)pi/(n+1)) (first kind) or cos(j pi/n) (second kind, n >= 1).
[[nodiscard]] PointSet chebyshev_points(PointKind kind, std::size_t n);

[[nodiscard]] double eval_T(long k, double x);
/// U_k; k = -1 is accepted and yields 0.
[[nodiscard]] double eval_U(long k, double x);

enum class VWKind { third, fourth };

/// Third (V_k) and fourth (W_k) kind Chebyshev polynomials.
[[nodiscard]] double eval_VW(VWKind kind, long k, double x);

/// Legendre polynomial P_k by Bonnet's recurrence.
[[nodiscard]] double eval_P(long k, double x);

/// Leading-order large-k approximation of P_k(x) for |x| < 1.
[[nodiscard]] double legendre_asymptotic(long k, double x);

/// U_k(cos(phi)) = sin((k+1) phi) / sin(phi), with the removable singularities at
/// phi = m*pi handled. Exact in phi, so preferred when the angle is known directly.
[[nodiscard]] double eval_U_angle(long k, double phi);

[[nodiscard]] double clenshaw_eval(const ChebSeries& s, double x);

/// Chebyshev series of the derivative (degree n-1; the zero series for n = 0).
[[nodiscard]] ChebSeries differentiate_series(const ChebSeries& s);

/// Throws DomainError when |x| > 1 + 1e-12; otherwise returns x clamped to [-1, 1].
double check_unit_interval(double x);

}  // namespace chebrate
