#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "chebrate/basis.hpp"
#include "chebrate/model.hpp"

namespace chebrate {

struct RemezOptions {
  std::size_t grid_density = 30;
  std::size_t max_iter = 100;
  /// Relative equioscillation defect at which to stop. When unset: 1e-8 if
  /// singular points are known, 1e-12 otherwise.
  std::optional<double> defect_tol;
  /// f', if known. Interior extrema are then placed at roots of the error
  /// derivative, which pins them far more tightly than comparing values.
  RealFunction derivative;
};

struct Certificate {
  double dlvp_lower = 0.0;
  double equioscillation_defect = 0.0;
};

struct RemezResult {
  ChebSeries poly;
  std::vector<double> reference;  // n+2 points, strictly increasing
  double levelled_error = 0.0;    // h
  double max_error = 0.0;         // E
  std::size_t iterations = 0;
  bool converged = false;
  double defect_tol = 0.0;
  Certificate certificate;
};

/// Best uniform approximation of degree n by multi-point Remez exchange.
///
/// `singular_points` are always sampled and kept as extremum candidates
/// without refinement. Not converging within max_iter is reported through
/// `converged`, not an exception. Throws SingularSystemError on a degenerate
/// reference system.
[[nodiscard]] RemezResult best_approx(const RealFunction& f, std::size_t n,
                                      const RemezOptions& opts = {},
                                      const std::vector<double>& singular_points = {});

/// Same with the singularity xi of the model inserted and f' taken from the model.
[[nodiscard]] RemezResult best_approx(const ModelFunction& m, std::size_t n,
                                      const RemezOptions& opts = {});

/// Recomputes the error on the reference and checks n+2 strict sign alternations.
/// Throws CertificateError naming the first offending index. Below an absolute
/// error of 1e-12 the result is certified without checks.
[[nodiscard]] Certificate verify_equioscillation(const RemezResult& r, const RealFunction& f);

}  // namespace chebrate
