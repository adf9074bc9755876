#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "chebrate/approx.hpp"
#include "chebrate/basis.hpp"
#include "chebrate/coeffs.hpp"
#include "chebrate/errors.hpp"

using namespace chebrate;

namespace {

constexpr double kPi = std::numbers::pi;

ModelFunction abs_x() { return make_model(0.0, 1.0, "one"); }

// a_{2m} of |x|, from its closed-form Chebyshev series
double abs_coeff(std::size_t k) {
  if (k % 2 == 1) return 0.0;
  const double m = static_cast<double>(k / 2);
  return -(4.0 / kPi) * ((k / 2) % 2 == 0 ? 1.0 : -1.0) / (4.0 * m * m - 1.0);
}

}  // namespace

TEST_CASE("model admissibility") {
  CHECK_THROWS_AS(make_model(0.2, 2.0, "one"), InvalidModel);
  CHECK_THROWS_AS(make_model(1.0, 1.0, "one"), InvalidModel);
  CHECK_THROWS_AS(make_model(-1.0, 3.0, "exp"), InvalidModel);
  CHECK_THROWS_AS(make_model(0.0, -0.5, "one"), InvalidModel);
  CHECK_THROWS_AS(make_model(1.5, 0.5, "one"), InvalidModel);
  CHECK_THROWS_AS(make_model(0.0, 1.5, "cosh"), InvalidModel);
  CHECK_NOTHROW(make_model(0.2, 3.0, "one"));
  CHECK_NOTHROW(make_model(1.0, 1.5, "inv-3-minus-x"));
  const auto m = make_model(0.3, 1.5, "exp");
  CHECK(m(0.7) == doctest::Approx(std::pow(0.4, 1.5) * std::exp(0.7)));
  CHECK(m.derivative(0.3) == 0.0);
  CHECK_THROWS_AS((void)make_model(0.0, 1.0, "one").derivative(0.0), DomainError);
  const auto s = make_model(0.0, 1.5, "sin-exp");
  CHECK(s.g_prime(0.4) == doctest::Approx(std::cos(0.4) * std::exp(std::sin(0.4))));
}

TEST_CASE("Chebyshev coefficients of |x|") {
  CHECK(cheb_coeff_quad(abs_x(), 0, 1e-13) == doctest::Approx(4.0 / kPi).epsilon(1e-13));
  CHECK(cheb_coeff_quad(abs_x(), 2, 1e-13) == doctest::Approx(4.0 / (3.0 * kPi)).epsilon(1e-13));
  CHECK(std::abs(cheb_coeff_quad(abs_x(), 3, 1e-13)) <= 1e-13);
  const auto t = cheb_coeffs_quad(abs_x(), 300, 1e-13);
  double worst = 0.0;
  for (std::size_t k = 0; k <= 300; ++k) worst = std::max(worst, std::abs(t.values[k] - abs_coeff(k)));
  CHECK(worst <= 1e-13);
  CHECK_THROWS_AS((void)cheb_coeffs_quad(abs_x(), 10, 1e-14), std::invalid_argument);
}

TEST_CASE("Chebyshev asymptotics") {
  CHECK(cheb_coeff_asym(abs_x(), 100) == doctest::Approx(-4.0 / (1e4 * kPi)).epsilon(1e-12));
  CHECK(std::abs(cheb_coeff_asym(abs_x(), 101)) <= 1e-20);
  const auto m = make_model(0.3, 1.5, "exp");
  const auto t = cheb_coeffs_quad(m, 2100, 1e-12);
  int checked = 0;
  for (std::size_t k = 1990; k <= 2100; ++k) {
    if (std::abs(eval_T(static_cast<long>(k), 0.3)) <= 0.5) continue;
    CHECK(std::abs(t.values[k] / cheb_coeff_asym(m, k) - 1.0) <= 0.05);
    ++checked;
  }
  CHECK(checked > 10);
  const AsymCoeff c = asym_constants(abs_x());
  CHECK(c.i1 == doctest::Approx(-4.0 / kPi));
  CHECK(std::abs(c.i2) < 1e-15);
  CHECK(std::isnan(c.b));
}

TEST_CASE("endpoint constant B") {
  const auto m = make_model(1.0, 1.5, "one");
  const AsymCoeff c = asym_constants(m);
  CHECK(c.endpoint);
  const double b = -std::sin(1.5 * kPi) * std::tgamma(4.0) / (std::pow(2.0, 0.5) * kPi);
  CHECK(c.b == doctest::Approx(b));
  const auto t = cheb_coeffs_quad(m, 1000, 1e-12);
  CHECK(t.values[1000] / cheb_coeff_asym(m, 1000) == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("coefficients against the giant-grid interpolation oracle") {
  const auto m = make_model(0.3, 1.5, "exp");
  const auto quad = cheb_coeffs_quad(m, 64, 1e-12);
  const auto oracle = interp_first_raw(m.as_function(), 1 << 18, 64);
  double worst = 0.0;
  for (std::size_t k = 0; k <= 64; ++k) worst = std::max(worst, std::abs(quad.values[k] - oracle[k]));
  CHECK(worst <= 1e-8);
}

TEST_CASE("decay law") {
  for (double xi : {0.25, 1.0}) {
    const auto m = make_model(xi, 1.5, "exp");
    const double p = xi == 1.0 ? 4.0 : 2.5;
    const auto t = cheb_coeffs_quad(m, 1024, 1e-13);
    // stay well above the quadrature floor
    const std::size_t kmax = xi == 1.0 ? 256 : 1000;
    double lo = 1e300;
    double hi = 0.0;
    for (std::size_t k = 16; k <= kmax; k *= 2) {
      // envelope over a short window, the coefficients oscillate with T_k(xi)
      double v = 0.0;
      for (std::size_t j = k; j < k + 8; ++j) v = std::max(v, std::abs(t.values[j]) * std::pow(double(j), p));
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    CHECK(hi / lo <= 10.0);
  }
}

TEST_CASE("parity for even functions") {
  const auto m = make_model(0.0, 1.5, "one");
  const auto c = cheb_coeffs_quad(m, 40, 1e-13);
  const auto l = legendre_coeffs_quad(m, 40, 1e-12);
  for (std::size_t k = 1; k <= 40; k += 2) {
    CHECK(std::abs(c.values[k]) <= 1e-13);
    CHECK(std::abs(l.values[k]) <= 1e-12);
  }
}

TEST_CASE("Legendre coefficients") {
  CHECK(legendre_coeff_quad(abs_x(), 0, 1e-12) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(std::abs(legendre_coeff_quad(abs_x(), 1, 1e-12)) <= 1e-13);
  CHECK(legendre_coeff_quad(abs_x(), 2, 1e-12) == doctest::Approx(0.625).epsilon(1e-13));
  // symbolic substitution: E(1,0) = -sqrt(2/pi), lambda1(0) = 2, lambda2(0) = 0
  for (std::size_t k : {10u, 12u, 100u}) {
    const double sign = (k / 2) % 2 == 0 ? 1.0 : -1.0;
    CHECK(legendre_coeff_asym(abs_x(), k) ==
          doctest::Approx(-2.0 * std::sqrt(2.0 / kPi) * sign * std::pow(double(k), -1.5)));
    CHECK(std::abs(legendre_coeff_asym(abs_x(), k + 1)) <= 1e-18);
  }
  const auto m = make_model(0.3, 1.5, "exp");
  const AsymCoeff c = asym_constants(m);
  const auto t = legendre_coeffs_quad(m, 2100, 1e-12);
  int checked = 0;
  for (std::size_t k = 1990; k <= 2100; ++k) {
    const double osc = c.lambda1 * eval_T(long(k), 0.3) +
                       c.lambda2 * std::sqrt(1 - 0.09) * eval_U(long(k) - 1, 0.3);
    if (std::abs(osc) <= 0.5) continue;
    CHECK(std::abs(t.values[k] / legendre_coeff_asym(m, k) - 1.0) <= 0.10);
    ++checked;
  }
  CHECK(checked > 10);
  CHECK_THROWS_AS((void)legendre_coeff_asym(make_model(1.0, 1.5, "one"), 10), UnsupportedError);
}
