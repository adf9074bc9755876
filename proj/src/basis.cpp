#include "chebrate/basis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "chebrate/errors.hpp"

namespace chebrate {

namespace {

constexpr double kDomainSlack = 1e-12;
constexpr double kEndpointBand = 1e-8;
constexpr long kRecurrenceMaxDegree = 100000;

double parity_sign(long k) { return (k % 2 == 0) ? 1.0 : -1.0; }

// y_{k+1} = 2x y_k - y_{k-1}, returning y_k given y_0 and y_1.
double three_term(long k, double x, double y0, double y1) {
  if (k == 0) return y0;
  double prev = y0;
  double cur = y1;
  for (long j = 1; j < k; ++j) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

void require_degree(long k, long min_k, const char* name) {
  if (k < min_k) {
    throw std::invalid_argument(std::string(name) + ": degree " + std::to_string(k) +
                                " below " + std::to_string(min_k));
  }
}

}  // namespace

double check_unit_interval(double x) {
  if (!(std::abs(x) <= 1.0 + kDomainSlack)) {
    throw DomainError("argument " + std::to_string(x) + " outside [-1, 1]");
  }
  return std::clamp(x, -1.0, 1.0);
}

ChebSeries::ChebSeries(std::vector<double> c) : coeffs_(std::move(c)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

ChebSeries ChebSeries::from_effective(std::vector<double> coeffs) {
  return ChebSeries(std::move(coeffs));
}

ChebSeries ChebSeries::from_prime(std::vector<double> coeffs) {
  if (!coeffs.empty()) coeffs.front() *= 0.5;
  return ChebSeries(std::move(coeffs));
}

ChebSeries ChebSeries::from_double_prime(std::vector<double> coeffs) {
  if (!coeffs.empty()) {
    coeffs.front() *= 0.5;
    if (coeffs.size() > 1) coeffs.back() *= 0.5;
  }
  return ChebSeries(std::move(coeffs));
}

double ChebSeries::operator()(double x) const { return clenshaw_eval(*this, x); }

PointSet chebyshev_points(PointKind kind, std::size_t n) {
  PointSet ps{kind, n, std::vector<double>(n + 1)};
  const double pi = std::numbers::pi;
  // sin forms keep symmetric pairs exactly antisymmetric
  if (kind == PointKind::first) {
    const double m = static_cast<double>(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
      ps.nodes[n - j] =
          std::sin(pi * (static_cast<double>(n) - 2.0 * static_cast<double>(j)) / (2.0 * m));
    }
  } else {
    if (n == 0) throw std::invalid_argument("second-kind points need n >= 1");
    const double m = static_cast<double>(n);
    for (std::size_t j = 0; j <= n; ++j) {
      ps.nodes[n - j] = std::sin(pi * (m - 2.0 * static_cast<double>(j)) / (2.0 * m));
    }
  }
  return ps;
}

double eval_T(long k, double x) {
  require_degree(k, 0, "eval_T");
  x = check_unit_interval(x);
  if (k <= kRecurrenceMaxDegree) return three_term(k, x, 1.0, x);
  if (x == 1.0) return 1.0;
  if (x == -1.0) return parity_sign(k);
  return std::cos(static_cast<double>(k) * std::acos(x));
}

double eval_U(long k, double x) {
  require_degree(k, -1, "eval_U");
  x = check_unit_interval(x);
  if (k == -1) return 0.0;
  if (1.0 - std::abs(x) < kEndpointBand || k <= 2) return three_term(k, x, 1.0, 2.0 * x);
  const double theta = std::acos(x);
  return std::sin(static_cast<double>(k + 1) * theta) / std::sin(theta);
}

double eval_VW(VWKind kind, long k, double x) {
  require_degree(k, 0, "eval_VW");
  x = check_unit_interval(x);
  const double kh = static_cast<double>(k) + 0.5;
  if (kind == VWKind::third) {
    if (1.0 + x < kEndpointBand || k <= 2) return three_term(k, x, 1.0, 2.0 * x - 1.0);
    const double theta = std::acos(x);
    return std::cos(kh * theta) / std::cos(0.5 * theta);
  }
  if (1.0 - x < kEndpointBand || k <= 2) return three_term(k, x, 1.0, 2.0 * x + 1.0);
  const double theta = std::acos(x);
  return std::sin(kh * theta) / std::sin(0.5 * theta);
}

double eval_P(long k, double x) {
  require_degree(k, 0, "eval_P");
  x = check_unit_interval(x);
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = x;
  for (long j = 1; j < k; ++j) {
    const double jd = static_cast<double>(j);
    const double next = ((2.0 * jd + 1.0) * x * cur - jd * prev) / (jd + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double legendre_asymptotic(long k, double x) {
  require_degree(k, 1, "legendre_asymptotic");
  if (!(std::abs(x) < 1.0)) {
    throw DomainError("legendre_asymptotic needs |x| < 1, got " + std::to_string(x));
  }
  const double kd = static_cast<double>(k);
  const double pi = std::numbers::pi;
  return std::sqrt(2.0 / pi) * std::pow(1.0 - x * x, -0.25) / std::sqrt(kd) *
         std::cos((kd + 0.5) * std::acos(x) - 0.25 * pi);
}

double eval_U_angle(long k, double phi) {
  require_degree(k, -1, "eval_U_angle");
  if (k == -1) return 0.0;
  const double s = std::sin(phi);
  if (std::abs(s) < kEndpointBand) return three_term(k, std::cos(phi), 1.0, 2.0 * std::cos(phi));
  return std::sin(static_cast<double>(k + 1) * phi) / s;
}

double clenshaw_eval(const ChebSeries& s, double x) {
  x = check_unit_interval(x);
  const auto c = s.coeffs();
  double b1 = 0.0;
  double b2 = 0.0;
  for (std::size_t k = c.size() - 1; k >= 1; --k) {
    const double b0 = c[k] + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return c[0] + x * b1 - b2;
}

ChebSeries differentiate_series(const ChebSeries& s) {
  const std::size_t n = s.degree();
  if (n == 0) return ChebSeries::from_effective({0.0});
  const auto c = s.coeffs();
  // d has room for d_n = d_{n+1} = 0
  std::vector<double> d(n + 2, 0.0);
  for (std::size_t k = n; k >= 1; --k) {
    d[k - 1] = d[k + 1] + 2.0 * static_cast<double>(k) * c[k];
  }
  d.resize(n);
  return ChebSeries::from_prime(std::move(d));
}

}  // namespace chebrate
