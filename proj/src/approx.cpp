#include "chebrate/approx.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "chebrate/coeffs.hpp"
#include "chebrate/errors.hpp"

namespace chebrate {

namespace {

using Index = unsigned long long;

// cos(pi m / denom) for m = 0..2*denom-1
std::vector<double> cosine_table(Index denom) {
  std::vector<double> t(2 * denom);
  const double pi = std::numbers::pi;
  for (Index m = 0; m < 2 * denom; ++m) {
    t[m] = std::cos(pi * static_cast<double>(m) / static_cast<double>(denom));
  }
  return t;
}

// f at cos((j + 1/2) pi / (n+1)), j = 0..n (descending x)
std::vector<double> first_kind_samples(const RealFunction& f, std::size_t n) {
  const PointSet ps = chebyshev_points(PointKind::first, n);
  std::vector<double> v(n + 1);
  for (std::size_t j = 0; j <= n; ++j) v[j] = f(ps.nodes[n - j]);
  return v;
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::cheb_projection: return "cheb-projection";
    case Method::legendre_projection: return "legendre-projection";
    case Method::interp_first: return "interp-first";
    case Method::interp_second: return "interp-second";
    case Method::minimax: return "minimax";
  }
  return "unknown";
}

Method method_from_string(const std::string& s) {
  for (Method m : {Method::cheb_projection, Method::legendre_projection, Method::interp_first,
                   Method::interp_second, Method::minimax}) {
    if (to_string(m) == s) return m;
  }
  throw std::invalid_argument("unknown approximation method '" + s + "'");
}

Approximant::Approximant(Method method, std::vector<double> coeffs, Provenance provenance)
    : method_(method), coeffs_(std::move(coeffs)), provenance_(std::move(provenance)) {
  if (coeffs_.empty()) throw std::invalid_argument("Approximant needs at least one coefficient");
}

ChebSeries Approximant::cheb_series() const {
  if (is_legendre()) throw UnsupportedError("Legendre approximant has no Chebyshev series");
  return ChebSeries::from_effective(coeffs_);
}

double Approximant::operator()(double x) const { return eval_approximant(*this, x); }

double eval_approximant(const Approximant& a, double x) {
  x = check_unit_interval(x);
  const auto c = a.coeffs();
  if (!a.is_legendre()) {
    double b1 = 0.0;
    double b2 = 0.0;
    for (std::size_t k = c.size() - 1; k >= 1; --k) {
      const double b0 = c[k] + 2.0 * x * b1 - b2;
      b2 = b1;
      b1 = b0;
    }
    return c[0] + x * b1 - b2;
  }
  double prev = 1.0;
  double cur = x;
  double sum = c[0];
  for (std::size_t k = 1; k < c.size(); ++k) {
    sum += c[k] * cur;
    const double kd = static_cast<double>(k);
    const double next = ((2.0 * kd + 1.0) * x * cur - kd * prev) / (kd + 1.0);
    prev = cur;
    cur = next;
  }
  return sum;
}

Approximant cheb_projection(const ModelFunction& m, std::size_t n, double tol) {
  const CoeffTable table = cheb_coeffs_quad(m, n, tol);
  return cheb_projection_from_raw(table.values, n, {{"tol", tol}});
}

Approximant cheb_projection_from_raw(std::span<const double> raw, std::size_t n,
                                     Provenance provenance) {
  if (raw.size() < n + 1) throw std::invalid_argument("not enough raw coefficients");
  std::vector<double> c(raw.begin(), raw.begin() + static_cast<std::ptrdiff_t>(n + 1));
  c[0] *= 0.5;
  return Approximant(Method::cheb_projection, std::move(c), std::move(provenance));
}

Approximant legendre_projection(const ModelFunction& m, std::size_t n, double tol) {
  const CoeffTable table = legendre_coeffs_quad(m, n, tol);
  return legendre_projection_from_raw(table.values, n, {{"tol", tol}});
}

Approximant legendre_projection_from_raw(std::span<const double> raw, std::size_t n,
                                         Provenance provenance) {
  if (raw.size() < n + 1) throw std::invalid_argument("not enough raw coefficients");
  return Approximant(Method::legendre_projection,
                     std::vector<double>(raw.begin(), raw.begin() + static_cast<std::ptrdiff_t>(n + 1)),
                     std::move(provenance));
}

std::vector<double> interp_first_raw(const RealFunction& f, std::size_t big_n, std::size_t kmax) {
  const std::vector<double> v = first_kind_samples(f, big_n);
  // cos(k (2j+1) pi / (2(N+1))) from a table indexed mod 4(N+1)
  const Index denom = 2 * (static_cast<Index>(big_n) + 1);
  const std::vector<double> table = cosine_table(denom);
  const Index period = 2 * denom;
  std::vector<double> b(kmax + 1, 0.0);
  const double scale = 2.0 / static_cast<double>(big_n + 1);
  for (std::size_t k = 0; k <= kmax; ++k) {
    const Index step = (2 * static_cast<Index>(k)) % period;
    Index idx = static_cast<Index>(k) % period;
    double acc = 0.0;
    for (std::size_t j = 0; j <= big_n; ++j) {
      acc += v[j] * table[idx];
      idx += step;
      if (idx >= period) idx -= period;
    }
    b[k] = scale * acc;
  }
  return b;
}

Approximant interp_first(const RealFunction& f, std::size_t n) {
  std::vector<double> b = interp_first_raw(f, n, n);
  b[0] *= 0.5;
  return Approximant(Method::interp_first, std::move(b),
                     {{"nodes", static_cast<double>(n + 1)}});
}

Approximant interp_second(const RealFunction& f, std::size_t n) {
  if (n < 1) throw std::invalid_argument("interp_second needs n >= 1");
  const PointSet ps = chebyshev_points(PointKind::second, n);
  std::vector<double> v(n + 1);
  for (std::size_t j = 0; j <= n; ++j) v[j] = f(ps.nodes[n - j]);  // x_j = cos(j pi / n)
  v.front() *= 0.5;
  v.back() *= 0.5;
  const Index denom = static_cast<Index>(n);
  const std::vector<double> table = cosine_table(denom);
  const Index period = 2 * denom;
  std::vector<double> c(n + 1, 0.0);
  const double scale = 2.0 / static_cast<double>(n);
  for (std::size_t k = 0; k <= n; ++k) {
    const Index step = static_cast<Index>(k) % period;
    Index idx = 0;
    double acc = 0.0;
    for (std::size_t j = 0; j <= n; ++j) {
      acc += v[j] * table[idx];
      idx += step;
      if (idx >= period) idx -= period;
    }
    c[k] = scale * acc;
  }
  c.front() *= 0.5;
  c.back() *= 0.5;
  return Approximant(Method::interp_second, std::move(c),
                     {{"nodes", static_cast<double>(n + 1)}});
}

AliasFirst alias_index_first(std::size_t k, std::size_t n) {
  if (k < n + 1) throw std::invalid_argument("alias_index_first needs k >= n+1");
  const auto kk = static_cast<long long>(k);
  const auto nn = static_cast<long long>(n);
  const long long period = 2 * (nn + 1);
  const auto eta = static_cast<std::size_t>(std::llabs((kk + nn) % period - nn));
  int sign = 0;
  const bool odd_multiple = kk % (nn + 1) == 0 && (kk / (nn + 1)) % 2 == 1;
  if (!odd_multiple) sign = (((kk - nn - 1) / period) % 2 == 0) ? 1 : -1;
  return {eta, sign};
}

std::size_t alias_index_second(std::size_t k, std::size_t n) {
  if (n < 1 || k < n + 1) throw std::invalid_argument("alias_index_second needs k >= n+1, n >= 1");
  const auto kk = static_cast<long long>(k);
  const auto nn = static_cast<long long>(n);
  return static_cast<std::size_t>(std::llabs((kk + nn - 1) % (2 * nn) - (nn - 1)));
}

std::vector<double> measurement_grid(std::size_t points, std::optional<double> xi) {
  if (points < 2) throw std::invalid_argument("measurement_grid needs at least 2 points");
  std::vector<double> grid = chebyshev_points(PointKind::second, points - 1).nodes;
  grid.front() = -1.0;
  grid.back() = 1.0;
  if (xi) grid.push_back(*xi);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

double max_error(const RealFunction& f, const Approximant& a, std::span<const double> grid) {
  double worst = 0.0;
  for (double x : grid) worst = std::max(worst, std::abs(f(x) - a(x)));
  return worst;
}

double lebesgue_factor(std::size_t n) {
  return 4.0 + 4.0 / (std::numbers::pi * std::numbers::pi) *
                   std::log(static_cast<double>(std::max<std::size_t>(n, 1)));
}

}  // namespace chebrate
