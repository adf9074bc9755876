#include "chebrate/tails.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "chebrate/errors.hpp"

namespace chebrate {

namespace {

constexpr double kZeroBand = 1e-12;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kMaxTerms = 2e7;
constexpr double kMaxDirect = 1e6;

double binomial(int n, int k) {
  double r = 1.0;
  for (int j = 1; j <= k; ++j) r = r * static_cast<double>(n - k + j) / static_cast<double>(j);
  return r;
}

// (s)_r = s (s+1) ... (s+r-1)
double rising(double s, int r) {
  double p = 1.0;
  for (int j = 0; j < r; ++j) p *= s + static_cast<double>(j);
  return p;
}

// r-th backward difference of c_k = k^(-s), evaluated at k.
double backward_difference(int r, double s, double k) {
  double acc = 0.0;
  for (int j = 0; j <= r; ++j) {
    const double term = binomial(r, j) * std::pow(k - static_cast<double>(j), -s);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

}  // namespace

PsiQuery::PsiQuery(double x, double nu, std::size_t n, double tol)
    : x_(x), nu_(nu), n_(n), tol_(tol) {
  if (!std::isfinite(x)) throw std::invalid_argument("PsiQuery: x must be finite");
  if (!(tol > 0.0)) throw std::invalid_argument("PsiQuery: tol must be positive");
  reduced_ = std::remainder(x, 2.0 * std::numbers::pi);
  if (reduced_ <= -std::numbers::pi) reduced_ = std::numbers::pi;
  at_zero_ = std::abs(reduced_) < kZeroBand;
  if (at_zero_ ? !(nu > 1.0) : !(nu > 0.0)) {
    throw std::invalid_argument(at_zero_ ? "PsiQuery: nu must exceed 1 at x = 0 mod 2pi"
                                         : "PsiQuery: nu must be positive");
  }
}

PsiValue psi_oracle(const PsiQuery& q, PsiPart part) {
  const double s = q.nu() + 1.0;
  double m = static_cast<double>(q.n()) + 1.0;
  if (q.at_zero()) {
    if (part == PsiPart::sin) return {0.0, 0.0, 0};
    const double z = hurwitz_zeta(s, m);
    return {z, 1e-13 * z, static_cast<std::size_t>(std::max(20.0, std::ceil(m)))};
  }
  if (part == PsiPart::sin && std::abs(std::abs(q.reduced_x()) - std::numbers::pi) < kZeroBand) {
    return {0.0, 0.0, 0};
  }

  const double x = q.reduced_x();
  const std::complex<double> w = 1.0 / (1.0 - std::polar(1.0, x));
  const double aw = std::abs(w);
  const int r = static_cast<int>(std::ceil(q.nu())) + 2;

  // Differencing loses digits on the first terms when |w| is large, so those
  // are summed directly and the accelerated sum starts further out.
  const double amp = std::ldexp(std::pow(aw, r), r);
  const double first = m;
  const auto lost = [&](double start) {
    return 4.0 * kEps * amp * (std::pow(start, 1.0 - s) / (s - 1.0) + 2.0 * std::pow(start, -s));
  };
  while (lost(m) > 0.1 * q.tol() && 2.0 * m - first <= kMaxDirect) m *= 2.0;
  std::complex<double> total = 0.0;
  double head_abs = 0.0;
  for (double k = m - 1.0; k >= first; k -= 1.0) {
    const double c = std::pow(k, -s);
    total += std::polar(c, k * x);
    head_abs += c;
  }

  // boundary terms of the repeated summation by parts
  std::complex<double> wp = w;
  double boundary_scale = 0.0;
  for (int i = 0; i < r; ++i) {
    const double k = m + static_cast<double>(i);
    total += wp * std::polar(1.0, k * x) * backward_difference(i, s, k);
    boundary_scale += std::ldexp(std::abs(wp), i) * std::pow(m, -s);
    wp *= w;
  }
  const std::complex<double> wr = wp / w;

  // remaining absolutely convergent sum up to K, with the integral tail bound
  const double p = s + static_cast<double>(r) - 1.0;
  const double scale = std::pow(aw, r) * rising(s, r) / p;
  const double target = 0.1 * q.tol();
  double last = std::ceil(static_cast<double>(r) + std::pow(scale / target, 1.0 / p));
  last = std::max(last, m + static_cast<double>(r) - 1.0);
  const bool capped = last - m > kMaxTerms;
  if (capped) last = m + kMaxTerms;

  std::complex<double> body = 0.0;
  for (double k = m + static_cast<double>(r); k <= last; k += 1.0) {
    body += std::polar(1.0, k * x) * backward_difference(r, s, k);
  }
  total += wr * body;

  const double truncation = scale * std::pow(last - static_cast<double>(r), -p);
  const double body_scale =
      std::ldexp(std::pow(aw, r), r) * (std::pow(m, 1.0 - s) / (s - 1.0) + std::pow(m, -s));
  const double rounding = 4.0 * kEps * (boundary_scale + body_scale + head_abs + std::abs(total));
  const double err = truncation + rounding;
  const double value = part == PsiPart::cos ? total.real() : total.imag();
  const auto terms = static_cast<std::size_t>(last - first + 1.0);
  if (capped || err > q.tol()) {
    throw ConvergenceError("psi_oracle: accelerated tail sum did not reach tol", value, err);
  }
  return {value, err, terms};
}

double psi_asym(const PsiQuery& q, PsiPart part) {
  if (q.n() < 1) throw std::invalid_argument("psi_asym needs n >= 1");
  const double nd = static_cast<double>(q.n());
  const double nu = q.nu();
  if (q.at_zero()) {
    if (part == PsiPart::sin) return 0.0;
    return std::pow(nd, -nu) / nu - 0.5 * std::pow(nd, -nu - 1.0);
  }
  const double x = q.reduced_x();
  const double half = 0.5 * (2.0 * nd + 1.0) * x;
  const double denom = 2.0 * std::sin(0.5 * x);
  const double lead = std::pow(nd, -nu - 1.0);
  if (part == PsiPart::cos) return -std::sin(half) / denom * lead;
  return std::cos(half) / denom * lead;
}

double hurwitz_zeta(double s, double a) {
  if (!(s > 1.0)) throw std::invalid_argument("hurwitz_zeta needs s > 1");
  if (!(a > 0.0)) throw std::invalid_argument("hurwitz_zeta needs a > 0");
  const auto direct = static_cast<long>(std::max(20.0, std::ceil(a)));
  double sum = 0.0;
  for (long k = direct - 1; k >= 0; --k) sum += std::pow(static_cast<double>(k) + a, -s);
  const double big_n = static_cast<double>(direct) + a;
  // Euler-Maclaurin tail through the B_10 term
  double tail = std::pow(big_n, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(big_n, -s);
  constexpr double bern_over_fact[] = {1.0 / 6.0 / 2.0, -1.0 / 30.0 / 24.0, 1.0 / 42.0 / 720.0,
                                       -1.0 / 30.0 / 40320.0, 5.0 / 66.0 / 3628800.0};
  for (int j = 1; j <= 5; ++j) {
    tail += bern_over_fact[j - 1] * rising(s, 2 * j - 1) * std::pow(big_n, -s - 2.0 * j + 1.0);
  }
  return sum + tail;
}

}  // namespace chebrate
