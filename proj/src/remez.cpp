#include "chebrate/remez.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "chebrate/errors.hpp"

namespace chebrate {

namespace {

constexpr double kTrivialError = 1e-12;
constexpr double kGoldenTol = 1e-13;

struct Extremum {
  double x;
  double e;
};

bool is_fixed(double x, const std::vector<double>& singular) {
  if (x == -1.0 || x == 1.0) return true;
  return std::find(singular.begin(), singular.end(), x) != singular.end();
}

// maximize s * e(x) on [a, b]
template <class Err>
Extremum golden_max(const Err& err, double a, double b, double s) {
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - r * (b - a);
  double d = a + r * (b - a);
  double fc = s * err(c);
  double fd = s * err(d);
  while (b - a > kGoldenTol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - r * (b - a);
      fc = s * err(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + r * (b - a);
      fd = s * err(d);
    }
  }
  const double x = fc > fd ? c : d;
  return {x, err(x)};
}

// root of the error derivative in [a, b] when it brackets a maximum of s * e
std::optional<double> derivative_root(const RealFunction& de, double a, double b, double s) {
  double da = 0.0;
  double db = 0.0;
  try {
    da = s * de(a);
    db = s * de(b);
  } catch (const DomainError&) {
    return std::nullopt;
  }
  if (!(da > 0.0 && db < 0.0)) return std::nullopt;
  for (int i = 0; i < 200 && b - a > 4 * std::numeric_limits<double>::epsilon(); ++i) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    const double dm = s * de(mid);
    if (dm > 0.0) {
      a = mid;
    } else if (dm < 0.0) {
      b = mid;
    } else {
      return mid;
    }
  }
  return 0.5 * (a + b);
}

ChebSeries solve_reference(const RealFunction& f, const std::vector<double>& ref, double& h) {
  const auto m = static_cast<Eigen::Index>(ref.size());
  const Eigen::Index n = m - 2;
  Eigen::MatrixXd a(m, m);
  Eigen::VectorXd rhs(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double x = ref[static_cast<std::size_t>(i)];
    double t0 = 1.0;
    double t1 = x;
    for (Eigen::Index k = 0; k <= n; ++k) {
      if (k == 0) {
        a(i, k) = 1.0;
      } else if (k == 1) {
        a(i, k) = x;
      } else {
        const double t2 = 2.0 * x * t1 - t0;
        t0 = t1;
        t1 = t2;
        a(i, k) = t2;
      }
    }
    a(i, n + 1) = (i % 2 == 0) ? 1.0 : -1.0;
    rhs(i) = f(x);
  }
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  const Eigen::VectorXd diag = lu.matrixLU().diagonal().cwiseAbs();
  if (!(diag.minCoeff() > 1e-14 * diag.maxCoeff())) {
    throw SingularSystemError("Remez reference system is numerically singular");
  }
  const Eigen::VectorXd sol = lu.solve(rhs);
  if (!sol.allFinite()) throw SingularSystemError("Remez reference system produced non-finite values");
  h = sol(n + 1);
  return ChebSeries::from_effective(std::vector<double>(sol.data(), sol.data() + n + 1));
}

}  // namespace

RemezResult best_approx(const RealFunction& f, std::size_t n, const RemezOptions& opts,
                        const std::vector<double>& singular_points) {
  if (opts.grid_density < 2) throw std::invalid_argument("best_approx: grid_density must be >= 2");
  std::vector<double> singular;
  for (double s : singular_points) {
    if (s >= -1.0 && s <= 1.0) singular.push_back(s);
  }
  const double defect_tol = opts.defect_tol.value_or(singular.empty() ? 1e-12 : 1e-8);

  std::vector<double> base_grid =
      chebyshev_points(PointKind::second, opts.grid_density * (n + 1) - 1).nodes;
  base_grid.insert(base_grid.end(), singular.begin(), singular.end());

  // A symmetric start forces h = 0 for even f and even n, so tilt it slightly.
  std::vector<double> ref = chebyshev_points(PointKind::second, n + 1).nodes;
  for (double& x : ref) x += 0.1 * (1.0 - x * x) / static_cast<double>(n + 2);
  double fscale = 0.0;
  for (double x : base_grid) fscale = std::max(fscale, std::abs(f(x)));
  const double stall = 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, fscale);

  RemezResult best;
  best.max_error = std::numeric_limits<double>::infinity();
  best.defect_tol = defect_tol;

  for (std::size_t iter = 1; iter <= opts.max_iter; ++iter) {
    double h = 0.0;
    const ChebSeries p = solve_reference(f, ref, h);
    const auto err = [&](double x) { return f(x) - p(x); };
    RealFunction derr;
    if (opts.derivative) {
      derr = [&, dp = differentiate_series(p)](double x) { return opts.derivative(x) - dp(x); };
    }

    std::vector<double> grid = base_grid;
    grid.insert(grid.end(), ref.begin(), ref.end());
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    std::vector<double> vals(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = err(grid[i]);

    // one extremum per run of equal sign
    std::vector<Extremum> ext;
    double max_abs = 0.0;
    std::size_t start = 0;
    while (start < grid.size()) {
      const double s = vals[start] >= 0.0 ? 1.0 : -1.0;
      std::size_t end = start;
      std::size_t arg = start;
      while (end < grid.size() && (vals[end] == 0.0 || (vals[end] > 0.0) == (s > 0.0))) {
        if (s * vals[end] > s * vals[arg]) arg = end;
        ++end;
      }
      Extremum e{grid[arg], vals[arg]};
      if (!is_fixed(e.x, singular)) {
        const double lo = grid[arg == 0 ? 0 : arg - 1];
        const double hi = grid[std::min(arg + 1, grid.size() - 1)];
        const Extremum refined = golden_max(err, lo, hi, s);
        if (s * refined.e > s * e.e) e = refined;
        if (derr) {
          if (const auto r = derivative_root(derr, lo, hi, s)) e = {*r, err(*r)};
        }
      }
      max_abs = std::max(max_abs, std::abs(e.e));
      ext.push_back(e);
      start = end;
    }
    for (double v : vals) max_abs = std::max(max_abs, std::abs(v));

    const double defect = max_abs > 0.0 ? (max_abs - std::abs(h)) / max_abs : 0.0;
    if (max_abs < best.max_error) {
      best.poly = p;
      best.reference = ref;
      best.levelled_error = h;
      best.max_error = max_abs;
      best.iterations = iter;
    }

    const bool trivial = max_abs < kTrivialError;
    while (ext.size() > n + 2) {
      if (std::abs(ext.front().e) < std::abs(ext.back().e)) {
        ext.erase(ext.begin());
      } else {
        ext.pop_back();
      }
    }
    const bool full = ext.size() == n + 2;
    std::vector<double> next(ext.size());
    for (std::size_t i = 0; i < ext.size(); ++i) next[i] = ext[i].x;

    if (trivial || defect <= defect_tol || max_abs - std::abs(h) <= stall) {
      RemezResult r;
      r.poly = p;
      r.reference = (full && !trivial) ? next : ref;
      r.levelled_error = h;
      r.max_error = max_abs;
      r.iterations = iter;
      r.converged = true;
      r.defect_tol = defect_tol;
      r.certificate = verify_equioscillation(r, f);
      return r;
    }
    if (!full) break;  // too few sign changes resolved on the grid
    ref = std::move(next);
  }

  best.converged = false;
  best.iterations = opts.max_iter;
  Certificate c;
  double dlvp = std::numeric_limits<double>::infinity();
  for (double x : best.reference) dlvp = std::min(dlvp, std::abs(f(x) - best.poly(x)));
  c.dlvp_lower = dlvp;
  c.equioscillation_defect =
      best.max_error > 0.0 ? (best.max_error - std::abs(best.levelled_error)) / best.max_error : 0.0;
  best.certificate = c;
  return best;
}

RemezResult best_approx(const ModelFunction& m, std::size_t n, const RemezOptions& opts) {
  RemezOptions o = opts;
  if (!o.derivative) o.derivative = [m](double x) { return m.derivative(x); };
  return best_approx(m.as_function(), n, o, {m.xi()});
}

Certificate verify_equioscillation(const RemezResult& r, const RealFunction& f) {
  const std::size_t n = r.poly.degree();
  const auto& ref = r.reference;
  std::vector<double> e(ref.size());
  double dlvp = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < ref.size(); ++i) {
    e[i] = f(ref[i]) - r.poly(ref[i]);
    dlvp = std::min(dlvp, std::abs(e[i]));
  }
  if (r.max_error < kTrivialError) return {ref.empty() ? 0.0 : dlvp, 0.0};
  if (ref.size() != n + 2) {
    throw CertificateError("reference has " + std::to_string(ref.size()) + " points, expected " +
                               std::to_string(n + 2),
                           std::min(ref.size(), n + 2));
  }
  for (std::size_t i = 0; i < ref.size(); ++i) {
    if (i > 0 && !(ref[i] > ref[i - 1])) {
      throw CertificateError("reference not strictly increasing at index " + std::to_string(i), i);
    }
    if (e[i] == 0.0 || (i > 0 && !(e[i] * e[i - 1] < 0.0))) {
      throw CertificateError("sign alternation fails at reference index " + std::to_string(i), i);
    }
  }
  return {dlvp, (r.max_error - std::abs(r.levelled_error)) / r.max_error};
}

}  // namespace chebrate
