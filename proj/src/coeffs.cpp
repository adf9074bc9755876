#include "chebrate/coeffs.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "chebrate/basis.hpp"
#include "chebrate/errors.hpp"
#include "chebrate/quadrature.hpp"

namespace chebrate {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr std::size_t kReseedInterval = 32;

void check_tol(double tol) {
  if (!(tol >= 1e-13)) throw std::invalid_argument("quadrature tol must be >= 1e-13");
}

std::vector<Panel> model_mesh(const ModelFunction& m, std::size_t max_k, double tol) {
  return graded_angle_mesh(std::acos(m.xi()), max_k, m.alpha(), tol);
}

// out[k] = sum_i v_i cos(k t_i), k = 0..max_k. The cosines are advanced by
// rotation and re-seeded from std::cos/std::sin every kReseedInterval steps.
std::vector<double> cosine_moments(const std::vector<double>& t, const std::vector<double>& v,
                                   std::size_t max_k) {
  const std::size_t np = t.size();
  std::vector<double> out(max_k + 1, 0.0);
  std::vector<double> c(np), s(np), c1(np), s1(np);
  for (std::size_t i = 0; i < np; ++i) {
    c1[i] = std::cos(t[i]);
    s1[i] = std::sin(t[i]);
  }
  for (std::size_t k = 0; k <= max_k; ++k) {
    if (k % kReseedInterval == 0) {
      const double kd = static_cast<double>(k);
      for (std::size_t i = 0; i < np; ++i) {
        c[i] = std::cos(kd * t[i]);
        s[i] = std::sin(kd * t[i]);
      }
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < np; ++i) acc += v[i] * c[i];
    out[k] = acc;
    for (std::size_t i = 0; i < np; ++i) {
      const double cn = c[i] * c1[i] - s[i] * s1[i];
      s[i] = s[i] * c1[i] + c[i] * s1[i];
      c[i] = cn;
    }
  }
  return out;
}

std::vector<double> cheb_rule_moments(const ModelFunction& m, const std::vector<Panel>& mesh,
                                      const GaussRule& rule, std::size_t max_k) {
  const CompositeRule cr = composite_rule(mesh, rule);
  std::vector<double> v(cr.nodes.size());
  const double scale = 2.0 / std::numbers::pi;
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = scale * cr.weights[i] * m.evaluate(std::cos(cr.nodes[i]));
  }
  return cosine_moments(cr.nodes, v, max_k);
}

// Panels in x obtained by mapping the angle mesh through x = cos(t).
std::vector<double> legendre_rule_moments(const ModelFunction& m,
                                          const std::vector<Panel>& angle_mesh,
                                          const GaussRule& rule, std::size_t max_k) {
  std::vector<Panel> xmesh;
  xmesh.reserve(angle_mesh.size());
  for (auto it = angle_mesh.rbegin(); it != angle_mesh.rend(); ++it) {
    xmesh.push_back({std::cos(it->hi), std::cos(it->lo)});
  }
  const CompositeRule cr = composite_rule(xmesh, rule);
  const std::size_t np = cr.nodes.size();
  std::vector<double> v(np), p_prev(np, 1.0), p_cur(cr.nodes);
  for (std::size_t i = 0; i < np; ++i) v[i] = cr.weights[i] * m.evaluate(cr.nodes[i]);
  std::vector<double> out(max_k + 1, 0.0);
  for (std::size_t k = 0; k <= max_k; ++k) {
    const std::vector<double>& pk = (k == 0) ? p_prev : p_cur;
    double acc = 0.0;
    for (std::size_t i = 0; i < np; ++i) acc += v[i] * pk[i];
    out[k] = 0.5 * (2.0 * static_cast<double>(k) + 1.0) * acc;
    if (k >= 1) {
      const double kd = static_cast<double>(k);
      for (std::size_t i = 0; i < np; ++i) {
        const double next = ((2.0 * kd + 1.0) * cr.nodes[i] * p_cur[i] - kd * p_prev[i]) / (kd + 1.0);
        p_prev[i] = p_cur[i];
        p_cur[i] = next;
      }
    }
  }
  return out;
}

CoeffTable compare_rules(std::vector<double> fine, const std::vector<double>& coarse, double tol,
                         const char* what) {
  CoeffTable table{std::move(fine), std::vector<double>(coarse.size())};
  double worst = 0.0;
  std::size_t worst_k = 0;
  for (std::size_t k = 0; k < coarse.size(); ++k) {
    table.errors[k] = std::abs(table.values[k] - coarse[k]);
    if (table.errors[k] > worst) {
      worst = table.errors[k];
      worst_k = k;
    }
  }
  if (worst > tol) {
    std::ostringstream msg;
    msg << what << ": coefficient " << worst_k << " error estimate " << worst
        << " exceeds tol " << tol;
    throw ToleranceError(msg.str(), worst);
  }
  return table;
}

}  // namespace

AsymCoeff asym_constants(const ModelFunction& m) {
  const double xi = m.xi();
  const double alpha = m.alpha();
  const double pi = std::numbers::pi;
  const double gx = m.g(xi);
  AsymCoeff c{m.endpoint_singularity(), kNaN, kNaN, kNaN, kNaN, kNaN, kNaN};
  if (c.endpoint) {
    c.b = -std::sin(alpha * pi) * std::tgamma(2.0 * alpha + 1.0) /
          (std::pow(2.0, alpha - 1.0) * pi) * gx;
    return c;
  }
  const double w = 1.0 - xi * xi;
  const double s = std::sin(0.5 * alpha * pi);
  c.i1 = -4.0 * std::pow(w, 0.5 * alpha) * std::tgamma(alpha + 1.0) / pi * s * gx;
  c.i2 = -4.0 * std::pow(w, 0.5 * alpha) * std::tgamma(alpha + 2.0) / pi * s *
         (w * m.g_prime(xi) - 0.5 * alpha * xi * gx);
  c.e = -std::sqrt(2.0 / pi) * std::pow(w, 0.5 * alpha + 0.25) * s * std::tgamma(alpha + 1.0) * gx;
  c.lambda1 = std::sqrt(1.0 + xi) + std::sqrt(1.0 - xi);
  c.lambda2 = std::sqrt(1.0 + xi) - std::sqrt(1.0 - xi);
  return c;
}

CoeffTable cheb_coeffs_quad(const ModelFunction& m, std::size_t max_k, double tol) {
  check_tol(tol);
  const auto mesh = model_mesh(m, max_k, tol);
  auto fine = cheb_rule_moments(m, mesh, gauss_legendre(32), max_k);
  const auto coarse = cheb_rule_moments(m, mesh, gauss_legendre(20), max_k);
  return compare_rules(std::move(fine), coarse, tol, "cheb_coeffs_quad");
}

double cheb_coeff_quad(const ModelFunction& m, std::size_t k, double tol) {
  check_tol(tol);
  const auto mesh = model_mesh(m, k, tol);
  const double kd = static_cast<double>(k);
  auto single = [&](const GaussRule& rule) {
    const CompositeRule cr = composite_rule(mesh, rule);
    double acc = 0.0;
    for (std::size_t i = 0; i < cr.nodes.size(); ++i) {
      acc += cr.weights[i] * m.evaluate(std::cos(cr.nodes[i])) * std::cos(kd * cr.nodes[i]);
    }
    return 2.0 / std::numbers::pi * acc;
  };
  return compare_rules({single(gauss_legendre(32))}, {single(gauss_legendre(20))}, tol,
                       "cheb_coeff_quad")
      .values.front();
}

double cheb_coeff_asym(const ModelFunction& m, std::size_t k) {
  if (k < 1) throw std::invalid_argument("cheb_coeff_asym needs k >= 1");
  const AsymCoeff c = asym_constants(m);
  const double kd = static_cast<double>(k);
  const long kl = static_cast<long>(k);
  const double alpha = m.alpha();
  if (c.endpoint) return c.b * eval_T(kl, m.xi()) / std::pow(kd, 2.0 * alpha + 1.0);
  return c.i1 * eval_T(kl, m.xi()) / std::pow(kd, alpha + 1.0) +
         c.i2 * eval_U(kl - 1, m.xi()) / std::pow(kd, alpha + 2.0);
}

CoeffTable legendre_coeffs_quad(const ModelFunction& m, std::size_t max_k, double tol) {
  check_tol(tol);
  const auto mesh = model_mesh(m, max_k, tol);
  auto fine = legendre_rule_moments(m, mesh, gauss_legendre(32), max_k);
  const auto coarse = legendre_rule_moments(m, mesh, gauss_legendre(20), max_k);
  return compare_rules(std::move(fine), coarse, tol, "legendre_coeffs_quad");
}

double legendre_coeff_quad(const ModelFunction& m, std::size_t k, double tol) {
  return legendre_coeffs_quad(m, k, tol).values.at(k);
}

double legendre_coeff_asym(const ModelFunction& m, std::size_t k) {
  if (m.endpoint_singularity()) {
    throw UnsupportedError("no Legendre coefficient asymptotics for an endpoint singularity");
  }
  if (k < 1) throw std::invalid_argument("legendre_coeff_asym needs k >= 1");
  const AsymCoeff c = asym_constants(m);
  const double xi = m.xi();
  const long kl = static_cast<long>(k);
  const double osc = c.lambda1 * eval_T(kl, xi) +
                     c.lambda2 * std::sqrt(1.0 - xi * xi) * eval_U(kl - 1, xi);
  return c.e * osc / std::pow(static_cast<double>(k), m.alpha() + 0.5);
}

}  // namespace chebrate
