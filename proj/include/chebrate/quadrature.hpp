#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace chebrate {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// m-point Gauss-Legendre rule computed by Newton iteration on P_m; cached per m.
[[nodiscard]] const GaussRule& gauss_legendre(std::size_t m);

struct Panel {
  double lo;
  double hi;
};

/// Panel mesh on the angle interval [0, pi] for integrands with one algebraic
/// singularity at `singular_angle` (if any) and oscillation up to cos(max_degree * theta).
///
/// Panels are at most pi / max(max_degree, 8) wide and are refined geometrically
/// (ratio 1/2) toward the singular angle to depth ceil(log2(1/tol)/(alpha+1)) + 10,
/// capped at 60. Panels are returned in increasing order.
[[nodiscard]] std::vector<Panel> graded_angle_mesh(std::optional<double> singular_angle,
                                                   std::size_t max_degree, double alpha,
                                                   double tol);

/// Nodes and weights of a composite rule over a mesh.
struct CompositeRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

[[nodiscard]] CompositeRule composite_rule(const std::vector<Panel>& mesh, const GaussRule& rule);

}  // namespace chebrate
