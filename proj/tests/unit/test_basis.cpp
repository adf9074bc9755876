#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "chebrate/basis.hpp"
#include "chebrate/errors.hpp"

using namespace chebrate;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> cheb_spaced(int count) {
  std::vector<double> xs;
  for (int j = 0; j < count; ++j) xs.push_back(std::cos(kPi * j / (count - 1)));
  return xs;
}

double direct_sum(const std::vector<double>& c, double x) {
  double s = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) s += c[k] * std::cos(static_cast<double>(k) * std::acos(x));
  return s;
}

}  // namespace

TEST_CASE("eval_T small cases") {
  CHECK(eval_T(0, 0.7) == 1.0);
  CHECK(eval_T(3, 0.5) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(eval_T(7, 1.0) == 1.0);
  CHECK(eval_T(4, -1.0) == 1.0);
  CHECK_THROWS_AS((void)eval_T(2, 1.0 + 1e-9), DomainError);
  CHECK(eval_T(2, 1.0 + 1e-13) == doctest::Approx(1.0));
}

TEST_CASE("eval_T matches trig form") {
  for (long k = 0; k <= 50; ++k) {
    for (double x : cheb_spaced(21)) {
      CHECK(std::abs(eval_T(k, x) - std::cos(static_cast<double>(k) * std::acos(x))) <= 1e-12);
    }
  }
  // large-degree branch
  CHECK(std::abs(eval_T(200000, 0.3) - std::cos(200000.0 * std::acos(0.3))) < 1e-9);
}

TEST_CASE("eval_U values") {
  CHECK(eval_U(-1, 0.4) == 0.0);
  CHECK(eval_U(1, 0.5) == doctest::Approx(1.0));
  CHECK(eval_U(5, 1.0) == doctest::Approx(6.0));
  CHECK(eval_U(4, -1.0) == doctest::Approx(5.0));
  CHECK(eval_U(5, -1.0) == doctest::Approx(-6.0));
  const double t = 0.9;
  CHECK(eval_U(6, std::cos(t)) == doctest::Approx(std::sin(7 * t) / std::sin(t)).epsilon(1e-13));
}

TEST_CASE("eval_VW values") {
  CHECK(eval_VW(VWKind::third, 0, 0.3) == 1.0);
  CHECK(eval_VW(VWKind::fourth, 3, 1.0) == doctest::Approx(7.0));
  CHECK(eval_VW(VWKind::third, 3, 1.0) == doctest::Approx(1.0));
  CHECK(std::abs(eval_VW(VWKind::fourth, 2, std::cos(2 * kPi / 5))) < 1e-14);
  const double t = 1.1;
  CHECK(eval_VW(VWKind::third, 4, std::cos(t)) ==
        doctest::Approx(std::cos(4.5 * t) / std::cos(t / 2)).epsilon(1e-13));
  CHECK(eval_VW(VWKind::fourth, 4, std::cos(t)) ==
        doctest::Approx(std::sin(4.5 * t) / std::sin(t / 2)).epsilon(1e-13));
  // near x = -1 the V recurrence is used: V_k(-1) = (-1)^k (2k+1)
  CHECK(eval_VW(VWKind::third, 3, -1.0) == doctest::Approx(-7.0));
}

TEST_CASE("eval_P values") {
  CHECK(eval_P(6, 1.0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(eval_P(7, -1.0) == doctest::Approx(-1.0).epsilon(1e-13));
  CHECK(eval_P(2, 0.0) == doctest::Approx(-0.5));
  CHECK(eval_P(1, 0.4) == doctest::Approx(0.4));
  CHECK(eval_P(3, 0.3) == doctest::Approx((5 * 0.027 - 3 * 0.3) / 2));
}

TEST_CASE("legendre_asymptotic") {
  const double e200 = std::abs(legendre_asymptotic(200, 0.2) - eval_P(200, 0.2));
  CHECK(e200 <= 5.0 * std::pow(200.0, -1.5));
  const double e1000 = std::abs(legendre_asymptotic(1000, 0.2) - eval_P(1000, 0.2));
  CHECK(e1000 / e200 <= 1.5 * std::pow(0.2, 1.5));
  const double m200 = std::abs(legendre_asymptotic(200, -0.5) - eval_P(200, -0.5));
  const double m1000 = std::abs(legendre_asymptotic(1000, -0.5) - eval_P(1000, -0.5));
  CHECK(m1000 / m200 <= 1.5 * std::pow(0.2, 1.5));
  CHECK(legendre_asymptotic(50, 0.0) ==
        doctest::Approx(std::sqrt(2 / kPi) / std::sqrt(50.0) * std::cos(50.5 * kPi / 2 - kPi / 4)));
  CHECK_THROWS_AS((void)legendre_asymptotic(10, 1.0), DomainError);
}

TEST_CASE("Chebyshev points") {
  const auto first = chebyshev_points(PointKind::first, 6);
  REQUIRE(first.nodes.size() == 7);
  for (int j = 0; j <= 6; ++j) {
    CHECK(std::abs(first.nodes[6 - j] - std::cos((j + 0.5) * kPi / 7)) <= 1e-15);
  }
  const auto second = chebyshev_points(PointKind::second, 8);
  for (int j = 0; j <= 8; ++j) {
    CHECK(std::abs(second.nodes[8 - j] - std::cos(j * kPi / 8)) <= 1e-15);
  }
  for (std::size_t i = 1; i < second.nodes.size(); ++i) CHECK(second.nodes[i] > second.nodes[i - 1]);
  CHECK(second.nodes.front() == -1.0);
  CHECK(second.nodes.back() == 1.0);
  CHECK_THROWS((void)chebyshev_points(PointKind::second, 0));
}

TEST_CASE("series conventions and Clenshaw") {
  CHECK(ChebSeries::from_effective({0.0, 1.0})(0.3) == doctest::Approx(0.3));
  CHECK(ChebSeries::from_effective({1.0, 0.0, 0.0, 0.0})(-0.77) == doctest::Approx(1.0));
  const auto p = ChebSeries::from_prime({2.0, 1.0});
  CHECK(p[0] == 1.0);
  const auto dp = ChebSeries::from_double_prime({2.0, 1.0, 4.0});
  CHECK(dp[0] == 1.0);
  CHECK(dp[2] == 2.0);
  CHECK(ChebSeries::from_effective({}).degree() == 0);

  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> c(20);
  for (double& v : c) v = u(rng);
  const auto s = ChebSeries::from_effective(c);
  CHECK(clenshaw_eval(s, 0.77) == doctest::Approx(direct_sum(c, 0.77)).epsilon(1e-12));
  CHECK_THROWS_AS((void)s(1.1), DomainError);
}

TEST_CASE("differentiate_series") {
  const auto d2 = differentiate_series(ChebSeries::from_effective({0, 0, 1}));
  REQUIRE(d2.degree() == 1);
  CHECK(d2[0] == doctest::Approx(0.0));
  CHECK(d2[1] == doctest::Approx(4.0));
  const auto d1 = differentiate_series(ChebSeries::from_effective({0, 1}));
  CHECK(d1.degree() == 0);
  CHECK(d1[0] == doctest::Approx(1.0));
  const auto d5 = differentiate_series(ChebSeries::from_effective({0, 0, 0, 0, 0, 1}));
  CHECK(d5(0.3) == doctest::Approx(5.0 * eval_U(4, 0.3)).epsilon(1e-13));
  const auto d0 = differentiate_series(ChebSeries::from_effective({3.0}));
  CHECK(d0.degree() == 0);
  CHECK(d0[0] == 0.0);
}

TEST_CASE("derivative identity T_k' = k U_{k-1}") {
  const double h = 1e-6;
  for (long k = 1; k <= 30; ++k) {
    for (double x : {-0.9, -0.4, 0.1, 0.55, 0.85}) {
      const double fd = (eval_T(k, x + h) - eval_T(k, x - h)) / (2 * h);
      CHECK(std::abs(fd - static_cast<double>(k) * eval_U(k - 1, x)) <= 1e-5);
    }
  }
}

TEST_CASE("Pell identity") {
  for (long k = 1; k <= 30; ++k) {
    for (double x = -0.9; x <= 0.9; x += 0.1) {
      const double t = eval_T(k, x);
      const double u = eval_U(k - 1, x);
      CHECK(std::abs(t * t - (x * x - 1) * u * u - 1.0) <= 1e-10);
    }
  }
}

TEST_CASE("differentiated series matches finite differences") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> c(16);
    for (double& v : c) v = u(rng);
    const auto s = ChebSeries::from_effective(c);
    const auto d = differentiate_series(s);
    for (double x : {-0.8, -0.3, 0.2, 0.6}) {
      const double fd = (s(x + 1e-6) - s(x - 1e-6)) / 2e-6;
      CHECK(std::abs(fd - d(x)) <= 1e-6);
    }
  }
}

TEST_CASE("eval_U_angle handles removable points") {
  CHECK(eval_U_angle(4, 0.0) == doctest::Approx(5.0));
  CHECK(eval_U_angle(4, kPi) == doctest::Approx(5.0));
  CHECK(eval_U_angle(3, kPi) == doctest::Approx(-4.0));
  CHECK(eval_U_angle(6, 0.7) == doctest::Approx(eval_U(6, std::cos(0.7))).epsilon(1e-12));
}
