#pragma once

#include <cstddef>

namespace chebrate {

/// Tail sums sum_{k>n} cos(kx)/k^(nu+1) and sum_{k>n} sin(kx)/k^(nu+1).
///
/// nu > 0 is required when x is not a multiple of 2 pi, nu > 1 otherwise.
class PsiQuery {
 public:
  PsiQuery(double x, double nu, std::size_t n, double tol = 1e-13);

  [[nodiscard]] double x() const noexcept { return x_; }
  [[nodiscard]] double nu() const noexcept { return nu_; }
  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] double tol() const noexcept { return tol_; }
  /// x reduced into (-pi, pi].
  [[nodiscard]] double reduced_x() const noexcept { return reduced_; }
  /// True when the reduced angle is within 1e-12 of zero.
  [[nodiscard]] bool at_zero() const noexcept { return at_zero_; }

 private:
  double x_;
  double nu_;
  std::size_t n_;
  double tol_;
  double reduced_;
  bool at_zero_;
};

struct PsiValue {
  double value;
  double err_estimate;
  std::size_t terms_used;
};

enum class PsiPart { cos, sin };

/// Tail sum computed to absolute accuracy tol.
///
/// Away from x = 0 (mod 2 pi) the oscillatory tail is summed by parts
/// ceil(nu) + 2 times, which leaves an absolutely convergent series; at
/// x = 0 (mod 2 pi) the cosine part is zeta(nu+1, n+1) and the sine part is 0.
/// Throws ConvergenceError when the accelerated sum cannot reach tol.
[[nodiscard]] PsiValue psi_oracle(const PsiQuery& q, PsiPart part);

/// Leading-order large-n behaviour of the tail sums.
[[nodiscard]] double psi_asym(const PsiQuery& q, PsiPart part);

/// Hurwitz zeta sum_{k>=0} (k+a)^(-s), s > 1, a > 0.
[[nodiscard]] double hurwitz_zeta(double s, double a);

}  // namespace chebrate
