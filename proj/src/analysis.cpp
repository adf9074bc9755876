#include "chebrate/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "chebrate/coeffs.hpp"
#include "chebrate/errors.hpp"

namespace chebrate {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRootBand = 1e-12;
constexpr double kResidualMax = 1e-10;

// Bisect F on [a, b] (F(a) F(b) < 0) until the midpoint stops moving.
template <class F, class T>
T bisect(const F& fn, T a, T b, T fa) {
  for (int it = 0; it < 200; ++it) {
    const T mid = (a + b) / 2;
    if (mid <= std::min(a, b) || mid >= std::max(a, b)) break;
    const T fm = fn(mid);
    if (fm == 0) return mid;
    if ((fm > 0) == (fa > 0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  using std::abs;
  return abs(fn(a)) <= abs(fn(b)) ? a : b;
}

// The condition in extended precision. Near x = xi its theta-derivative grows
// like n^2, so double roots leave residuals around 1e-10 once n is in the thousands.
long double condition_ld(long double theta, long double t_xi, std::size_t n) {
  const long double k1 = 2.0L * static_cast<long double>(n) + 1.0L;
  const auto u = [k1](long double phi) {
    const long double s = std::sin(phi);
    if (std::fabs(s) < 1e-15L) return k1 * std::cos(k1 * phi) / std::cos(phi);
    return std::sin(k1 * phi) / s;
  };
  return u(0.5L * (theta + t_xi)) + u(0.5L * (theta - t_xi));
}

}  // namespace

PhiAngles phi_angles(double x, double xi) {
  const double t = std::acos(check_unit_interval(x));
  const double t_xi = std::acos(check_unit_interval(xi));
  return {0.5 * (t + t_xi), 0.5 * (t - t_xi)};
}

double predict_pointwise(const ModelFunction& m, std::size_t n, double x) {
  if (n < 2) throw std::invalid_argument("predict_pointwise needs n >= 2");
  x = check_unit_interval(x);
  const AsymCoeff c = asym_constants(m);
  const double nd = static_cast<double>(n);
  const double a = m.alpha();
  const auto k = static_cast<long>(2 * n);
  const PhiAngles phi = phi_angles(x, m.xi());
  if (!c.endpoint) {
    if (x == m.xi()) {
      return c.i1 / (2.0 * a) * std::pow(nd, -a) -
             c.i1 * (eval_U(k, m.xi()) + 1.0) / 4.0 * std::pow(nd, -a - 1.0);
    }
    return -c.i1 / 4.0 * (eval_U_angle(k, phi.phi_plus) + eval_U_angle(k, phi.phi_minus)) *
           std::pow(nd, -a - 1.0);
  }
  if (x == m.xi()) {
    return c.b * (1.0 / (2.0 * a) * std::pow(nd, -2.0 * a) - 0.5 * std::pow(nd, -2.0 * a - 1.0));
  }
  const double angle = m.xi() > 0.0 ? phi.phi_plus : phi.phi_minus;
  return -c.b * eval_U_angle(k, angle) / 2.0 * std::pow(nd, -2.0 * a - 1.0);
}

double max_error_limit(double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("max_error_limit needs alpha > 0");
  if (near_integer(alpha) && std::lround(alpha) % 2 == 0) {
    throw std::invalid_argument("max_error_limit: alpha must not be an even integer");
  }
  return 2.0 * std::tgamma(alpha) / kPi * std::abs(std::sin(alpha * kPi / 2.0));
}

double superconv_condition(double theta, double xi, std::size_t n) {
  const double t_xi = std::acos(check_unit_interval(xi));
  const auto k = static_cast<long>(2 * n);
  return eval_U_angle(k, 0.5 * (theta + t_xi)) + eval_U_angle(k, 0.5 * (theta - t_xi));
}

SuperconvSet superconv_interior(double xi, std::size_t n, double eps) {
  if (!(xi > -1.0 && xi < 1.0)) throw std::invalid_argument("superconv_interior needs xi in (-1, 1)");
  if (n < 1) throw std::invalid_argument("superconv_interior needs n >= 1");
  const long double t_xi = std::acos(static_cast<long double>(xi));
  const auto cond = [&](long double theta) { return condition_ld(theta, t_xi, n); };
  const std::size_t cells = 20 * n;
  const long double pi = std::numbers::pi_v<long double>;
  std::vector<long double> theta(cells + 1);
  std::vector<long double> val(cells + 1);
  for (std::size_t i = 0; i <= cells; ++i) {
    theta[i] = pi * static_cast<long double>(i) / static_cast<long double>(cells);
    val[i] = cond(theta[i]);
  }
  std::vector<long double> roots;  // in theta
  for (std::size_t i = 0; i <= cells; ++i) {
    if (std::fabs(val[i]) <= kRootBand) {
      roots.push_back(theta[i]);
      continue;
    }
    if (i < cells && std::fabs(val[i + 1]) > kRootBand && (val[i] > 0.0L) != (val[i + 1] > 0.0L)) {
      roots.push_back(bisect(cond, theta[i], theta[i + 1], val[i]));
    }
  }
  SuperconvSet s;
  s.eps = eps;
  // descending theta = ascending x
  for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
    const auto y = static_cast<double>(std::cos(*it));
    const auto r = static_cast<double>(cond(*it));
    s.points.push_back(y);
    s.residuals.push_back(r);
    if (std::abs(y - xi) >= eps && std::abs(r) <= kResidualMax) s.filtered.push_back(y);
  }
  return s;
}

SuperconvSet superconv_interior(const ModelFunction& m, std::size_t n, double eps) {
  return superconv_interior(m.xi(), n, eps);
}

std::size_t endpoint_cutoff(std::size_t n, double eps) {
  if (!(eps > 0.0 && eps < 2.0)) throw std::invalid_argument("endpoint_cutoff needs 0 < eps < 2");
  const double v = (2.0 * static_cast<double>(n) + 1.0) / (2.0 * kPi) * std::acos(1.0 - eps);
  return static_cast<std::size_t>(std::floor(v));
}

SuperconvSet superconv_endpoint(double xi, std::size_t n, double eps) {
  if (xi != 1.0 && xi != -1.0) throw std::invalid_argument("superconv_endpoint needs xi = +-1");
  if (n < 1) throw std::invalid_argument("superconv_endpoint needs n >= 1");
  const std::size_t first = std::max<std::size_t>(1, endpoint_cutoff(n, eps));
  const VWKind kind = xi < 0.0 ? VWKind::third : VWKind::fourth;
  SuperconvSet s;
  s.eps = eps;
  for (std::size_t j = 1; j <= n; ++j) {
    const double y =
        xi * std::cos(2.0 * kPi * static_cast<double>(j) / (2.0 * static_cast<double>(n) + 1.0));
    s.points.push_back(y);
    s.residuals.push_back(eval_VW(kind, static_cast<long>(n), y));
    if (j >= first) s.filtered.push_back(y);
  }
  return s;
}

double diff_error(const ModelFunction& m, std::size_t n, double x, double tol) {
  if (!(m.alpha() > 1.0)) throw std::invalid_argument("diff_error needs alpha > 1");
  const CoeffTable t = cheb_coeffs_quad(m, n, tol);
  return diff_error(m, differentiate_series(ChebSeries::from_prime(t.values)), x);
}

double diff_error(const ModelFunction& m, const ChebSeries& derivative, double x) {
  x = check_unit_interval(x);
  return m.derivative(x) - derivative(x);
}

RateExponent rate_table(RateMethod method, XiKind xi_kind, Region region) {
  const bool interior = xi_kind == XiKind::interior;
  // interior rates are in alpha, endpoint rates in 2 alpha
  const double ca = interior ? 1.0 : 2.0;
  const auto unsupported = [] {
    return UnsupportedError("no rate available for this method/singularity/region combination");
  };
  switch (method) {
    case RateMethod::cheb_projection:
      switch (region) {
        case Region::at_singularity:
        case Region::near_singularity:
        case Region::max_norm: return {ca, 0.0};
        case Region::at_endpoints:
        case Region::generic: return {ca, 1.0};
        case Region::superconvergence: return {ca, 2.0};
      }
      break;
    case RateMethod::interp_first:
    case RateMethod::interp_second:
      switch (region) {
        case Region::near_singularity:
        case Region::max_norm: return {ca, 0.0};
        case Region::at_singularity:
          // the second-kind set contains xi = +-1 as a node
          if (!interior && method == RateMethod::interp_second) return {ca, 1.0};
          return {ca, 0.0};
        case Region::at_endpoints:
        case Region::generic: return {ca, 1.0};
        case Region::superconvergence: throw unsupported();
      }
      break;
    case RateMethod::legendre_projection:
      if (!interior) throw unsupported();
      switch (region) {
        case Region::at_singularity:
        case Region::near_singularity:
        case Region::max_norm: return {1.0, 0.0};
        case Region::at_endpoints: return {1.0, 0.5};
        case Region::generic: return {1.0, 1.0};
        case Region::superconvergence: throw unsupported();
      }
      break;
    case RateMethod::minimax:
      if (region == Region::max_norm) return {ca, 0.0};
      throw unsupported();
    case RateMethod::diff:
      switch (region) {
        case Region::at_singularity: return interior ? RateExponent{1.0, 0.0} : RateExponent{2.0, -2.0};
        case Region::near_singularity:
        case Region::generic: return {ca, 0.0};
        case Region::at_endpoints: return interior ? RateExponent{1.0, -1.0} : RateExponent{2.0, -1.0};
        case Region::max_norm: return interior ? RateExponent{1.0, -1.0} : RateExponent{2.0, -2.0};
        case Region::superconvergence: throw unsupported();
      }
      break;
  }
  throw unsupported();
}

XiKind xi_kind_of(const ModelFunction& m) {
  return m.endpoint_singularity() ? XiKind::endpoint : XiKind::interior;
}

RateFit fit_rate(const std::vector<double>& ns, const std::vector<double>& errs) {
  if (ns.size() != errs.size()) throw std::invalid_argument("fit_rate: size mismatch");
  if (ns.size() < 4) throw std::invalid_argument("fit_rate needs at least 4 points");
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (!(errs[i] > 0.0) || !std::isfinite(errs[i])) {
      throw std::invalid_argument("fit_rate needs positive finite errors");
    }
    if (!(ns[i] > 0.0) || (i > 0 && !(ns[i] > ns[i - 1]))) {
      throw std::invalid_argument("fit_rate needs strictly increasing positive n");
    }
  }
  const auto m = static_cast<double>(ns.size());
  std::vector<double> lx(ns.size());
  std::vector<double> ly(ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) {
    lx[i] = std::log(ns[i]);
    ly[i] = std::log(errs[i]);
  }
  const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / m;
  const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / m;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  RateFit fit;
  fit.ns = ns;
  fit.errors = errs;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double sse = 0.0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
    sse += r * r;
  }
  // constant data: a horizontal line fits perfectly
  fit.r2 = syy > 0.0 ? std::clamp(1.0 - sse / syy, 0.0, 1.0) : 1.0;
  return fit;
}

RateFit fit_rate_trimmed(const std::vector<double>& ns, const std::vector<double>& errs,
                         double r2_min) {
  RateFit fit = fit_rate(ns, errs);
  std::size_t drop = 0;
  while (fit.r2 < r2_min && ns.size() - drop > 4) {
    ++drop;
    const auto off = static_cast<std::ptrdiff_t>(drop);
    fit = fit_rate(std::vector<double>(ns.begin() + off, ns.end()),
                   std::vector<double>(errs.begin() + off, errs.end()));
  }
  return fit;
}

std::vector<std::size_t> envelope_window(std::size_t n) {
  const std::size_t step = std::max<std::size_t>(1, n / 32);
  std::vector<std::size_t> out;
  for (std::size_t m = n; 2 * m < 3 * n || m == n; m += step) out.push_back(m);
  return out;
}

std::vector<std::size_t> dyadic(std::size_t lo, std::size_t hi) {
  if (lo == 0) throw std::invalid_argument("dyadic needs lo >= 1");
  std::vector<std::size_t> out;
  for (std::size_t n = lo; n <= hi; n *= 2) out.push_back(n);
  return out;
}

}  // namespace chebrate
