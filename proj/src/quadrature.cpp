#include "chebrate/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace chebrate {

namespace {

GaussRule compute_gauss_legendre(std::size_t m) {
  GaussRule rule{std::vector<double>(m), std::vector<double>(m)};
  const double md = static_cast<double>(m);
  for (std::size_t i = 0; i < (m + 1) / 2; ++i) {
    // Tricomi initial guess for the i-th largest root
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (md + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t j = 2; j <= m; ++j) {
        const double jd = static_cast<double>(j);
        const double p2 = ((2.0 * jd - 1.0) * x * p1 - (jd - 1.0) * p0) / jd;
        p0 = p1;
        p1 = p2;
      }
      dp = md * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[m - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[m - 1 - i] = w;
  }
  if (m % 2 == 1) rule.nodes[m / 2] = 0.0;
  return rule;
}

void graded_side(std::vector<Panel>& out, double sing, double end, double width, int depth) {
  // Panels from the singular angle toward `end` (either direction).
  const double len = std::abs(end - sing);
  if (len <= 0.0) return;
  const double dir = end > sing ? 1.0 : -1.0;
  const double d = std::min(width, len);
  auto push = [&](double a, double b) {
    const double lo = sing + dir * a;
    const double hi = sing + dir * b;
    out.push_back(dir > 0 ? Panel{lo, hi} : Panel{hi, lo});
  };
  push(0.0, std::ldexp(d, -depth));
  for (int j = depth; j >= 1; --j) push(std::ldexp(d, -j), std::ldexp(d, -j + 1));
  const double rest = len - d;
  if (rest > 0.0) {
    const auto count = static_cast<std::size_t>(std::ceil(rest / width - 1e-12));
    for (std::size_t i = 0; i < count; ++i) {
      const double a = d + rest * static_cast<double>(i) / static_cast<double>(count);
      const double b = d + rest * static_cast<double>(i + 1) / static_cast<double>(count);
      push(a, b);
    }
  }
}

}  // namespace

const GaussRule& gauss_legendre(std::size_t m) {
  if (m == 0) throw std::invalid_argument("gauss_legendre needs m >= 1");
  static std::mutex mutex;
  static std::map<std::size_t, GaussRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, compute_gauss_legendre(m)).first;
  return it->second;
}

std::vector<Panel> graded_angle_mesh(std::optional<double> singular_angle,
                                     std::size_t max_degree, double alpha, double tol) {
  const double pi = std::numbers::pi;
  const double width = pi / static_cast<double>(std::max<std::size_t>(max_degree, 8));
  std::vector<Panel> mesh;
  if (!singular_angle) {
    const auto count = static_cast<std::size_t>(std::ceil(pi / width - 1e-12));
    for (std::size_t i = 0; i < count; ++i) {
      mesh.push_back({pi * static_cast<double>(i) / static_cast<double>(count),
                      pi * static_cast<double>(i + 1) / static_cast<double>(count)});
    }
    return mesh;
  }
  const double sing = std::clamp(*singular_angle, 0.0, pi);
  const int depth = std::min(
      60, static_cast<int>(std::ceil(std::log2(1.0 / tol) / (alpha + 1.0))) + 10);
  std::vector<Panel> left;
  graded_side(left, sing, 0.0, width, depth);
  std::reverse(left.begin(), left.end());
  mesh = std::move(left);
  graded_side(mesh, sing, pi, width, depth);
  return mesh;
}

CompositeRule composite_rule(const std::vector<Panel>& mesh, const GaussRule& rule) {
  CompositeRule out;
  out.nodes.reserve(mesh.size() * rule.nodes.size());
  out.weights.reserve(mesh.size() * rule.nodes.size());
  for (const auto& p : mesh) {
    const double half = 0.5 * (p.hi - p.lo);
    const double mid = 0.5 * (p.hi + p.lo);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      out.nodes.push_back(mid + half * rule.nodes[i]);
      out.weights.push_back(half * rule.weights[i]);
    }
  }
  return out;
}

}  // namespace chebrate
