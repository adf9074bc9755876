#include "cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "chebrate/analysis.hpp"
#include "chebrate/approx.hpp"
#include "chebrate/coeffs.hpp"
#include "chebrate/errors.hpp"
#include "chebrate/remez.hpp"
#include "chebrate/serialize.hpp"
#include "chebrate/tails.hpp"

namespace chebrate::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kLegendreTol = 1e-12;

void write_row(std::ostream& out, const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << ',';
    out << format_double(values[i]);
  }
  out << '\n';
}

std::vector<std::size_t> require_ns(const ExperimentConfig& cfg) {
  if (cfg.ns.empty()) throw ConfigError("no degrees given (set \"ns\" or --ns)");
  return cfg.ns;
}

std::vector<std::size_t> sorted_ns(const ExperimentConfig& cfg) {
  auto ns = require_ns(cfg);
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  return ns;
}

double grid_max(const std::vector<double>& grid, const std::function<double(double)>& err) {
  double v = 0.0;
  for (double x : grid) v = std::max(v, std::abs(err(x)));
  return v;
}

ChebSeries projection_series(const CoeffTable& t, std::size_t n) {
  return ChebSeries::from_prime(std::vector<double>(t.values.begin(),
                                                    t.values.begin() + static_cast<std::ptrdiff_t>(n + 1)));
}

SuperconvSet superconv_set(const ModelFunction& m, std::size_t n, double eps) {
  return m.endpoint_singularity() ? superconv_endpoint(m.xi(), n, eps)
                                  : superconv_interior(m, n, eps);
}

RemezOptions remez_options(const ExperimentConfig& cfg) {
  RemezOptions o;
  o.grid_density = cfg.grid_density;
  return o;
}

}  // namespace

std::size_t thread_cap() {
  std::size_t cap = 0;
  if (const char* env = std::getenv("CHEBRATE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) cap = static_cast<std::size_t>(v);
  }
  if (cap == 0) cap = std::max(1u, std::thread::hardware_concurrency());
  return cap;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min(thread_cap(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            body(i);
          } catch (...) {
            const std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

std::string header_line(const ExperimentConfig& cfg) {
  return std::string("# chebrate ") + CHEBRATE_VERSION + " config " + cfg.hash();
}

int cmd_errcurve(const ExperimentConfig& cfg, std::ostream& out, std::ostream& log) {
  const auto ns = require_ns(cfg);
  const ModelFunction m = cfg.model_function();
  const RealFunction f = m.as_function();
  const std::vector<double> grid = measurement_grid(cfg.grid, m.xi());

  std::vector<std::vector<std::vector<double>>> blocks(ns.size());
  parallel_for(ns.size(), [&](std::size_t idx) {
    const std::size_t n = ns[idx];
    std::optional<Approximant> fn;
    std::optional<Approximant> p1;
    std::optional<Approximant> p2;
    std::optional<Approximant> leg;
    std::optional<ChebSeries> pstar;
    if (cfg.wants("cheb-projection")) fn = cheb_projection(m, n, cfg.tol);
    if (cfg.wants("interp-first")) p1 = interp_first(f, n);
    if (cfg.wants("interp-second") && n >= 1) p2 = interp_second(f, n);
    if (cfg.wants("legendre-projection")) {
      leg = legendre_projection(m, n, std::max(cfg.tol, kLegendreTol));
    }
    if (cfg.wants("minimax")) pstar = best_approx(m, n, remez_options(cfg)).poly;
    const bool predict = fn && n >= 2;
    auto& rows = blocks[idx];
    rows.reserve(grid.size());
    for (double x : grid) {
      const double fx = f(x);
      rows.push_back({static_cast<double>(n), x, fx, fn ? std::abs(fx - (*fn)(x)) : kNaN,
                      p1 ? std::abs(fx - (*p1)(x)) : kNaN, p2 ? std::abs(fx - (*p2)(x)) : kNaN,
                      pstar ? std::abs(fx - (*pstar)(x)) : kNaN,
                      leg ? std::abs(fx - (*leg)(x)) : kNaN,
                      predict ? std::abs(predict_pointwise(m, n, x)) : kNaN});
    }
  });

  out << header_line(cfg) << '\n';
  out << "n,x,f,fn_err,pI_err,pII_err,pstar_err,legendre_err,predicted_fn_err\n";
  for (const auto& block : blocks) {
    for (const auto& row : block) write_row(out, row);
  }
  log << "errcurve: " << ns.size() << " degree(s), " << grid.size() << " grid points\n";
  return kOk;
}

int cmd_sweep(const ExperimentConfig& cfg, std::ostream& csv, std::ostream& report,
              std::ostream& log) {
  const auto ns = sorted_ns(cfg);
  const ModelFunction m = cfg.model_function();
  const RealFunction f = m.as_function();
  const std::vector<double> grid = measurement_grid(cfg.grid, m.xi());
  const bool do_fn = cfg.wants("cheb-projection");
  const bool do_sc = cfg.wants("superconv");
  const bool do_star = cfg.wants("minimax");
  const bool do_diff = cfg.wants("diff") && m.alpha() > 1.0;
  if (cfg.wants("diff") && !do_diff && !cfg.methods.empty()) {
    log << "sweep: derivative columns need alpha > 1; left empty\n";
  }
  const bool need_table = do_fn || do_sc || do_diff;
  const CoeffTable table = need_table ? cheb_coeffs_quad(m, ns.back(), cfg.tol) : CoeffTable{};

  const std::vector<std::string> names{"maxerr_fn", "maxerr_superconv", "maxerr_pstar",
                                       "maxerr_diff_fn", "maxerr_diff_pstar"};
  std::vector<std::vector<double>> rows(ns.size(), std::vector<double>(names.size(), kNaN));
  parallel_for(ns.size(), [&](std::size_t idx) {
    const std::size_t n = ns[idx];
    auto& row = rows[idx];
    if (need_table) {
      const ChebSeries fn = projection_series(table, n);
      if (do_fn) row[0] = grid_max(grid, [&](double x) { return f(x) - fn(x); });
      if (do_sc) {
        const SuperconvSet s = superconv_set(m, n, cfg.eps);
        if (!s.filtered.empty()) {
          row[1] = grid_max(s.filtered, [&](double x) { return f(x) - fn(x); });
        }
      }
      if (do_diff) {
        const ChebSeries d = differentiate_series(fn);
        row[3] = grid_max(grid, [&](double x) { return diff_error(m, d, x); });
      }
    }
    if (do_star) {
      const RemezResult r = best_approx(m, n, remez_options(cfg));
      row[2] = grid_max(grid, [&](double x) { return f(x) - r.poly(x); });
      if (do_diff) {
        const ChebSeries d = differentiate_series(r.poly);
        row[4] = grid_max(grid, [&](double x) { return diff_error(m, d, x); });
      }
    }
  });

  csv << header_line(cfg) << '\n';
  csv << "n";
  for (const auto& name : names) csv << ',' << name;
  csv << '\n';
  for (std::size_t i = 0; i < ns.size(); ++i) {
    std::vector<double> row{static_cast<double>(ns[i])};
    row.insert(row.end(), rows[i].begin(), rows[i].end());
    write_row(csv, row);
  }

  // fitted slopes against the rate table
  const XiKind kind = xi_kind_of(m);
  const std::map<std::string, std::optional<std::pair<RateMethod, Region>>> expected{
      {"maxerr_fn", std::pair{RateMethod::cheb_projection, Region::max_norm}},
      {"maxerr_superconv", std::pair{RateMethod::cheb_projection, Region::superconvergence}},
      {"maxerr_pstar", std::pair{RateMethod::minimax, Region::max_norm}},
      {"maxerr_diff_fn", std::pair{RateMethod::diff, Region::max_norm}},
      {"maxerr_diff_pstar", std::nullopt}};
  nlohmann::json rep;
  rep["version"] = CHEBRATE_VERSION;
  rep["config_hash"] = cfg.hash();
  rep["rate_tol"] = cfg.rate_tol;
  bool all_pass = true;
  for (std::size_t c = 0; c < names.size(); ++c) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (std::size_t i = 0; i < ns.size(); ++i) {
      if (std::isfinite(rows[i][c]) && rows[i][c] > 0.0 && ns[i] > 0) {
        xs.push_back(static_cast<double>(ns[i]));
        ys.push_back(rows[i][c]);
      }
    }
    if (xs.size() < 4) continue;
    const RateFit fit = fit_rate_trimmed(xs, ys);
    nlohmann::json col{{"slope", fit.slope},
                       {"intercept", fit.intercept},
                       {"r2", fit.r2},
                       {"points", fit.ns.size()}};
    const auto& e = expected.at(names[c]);
    if (e) {
      const double beta = rate_table(e->first, kind, e->second).beta(m.alpha());
      const bool pass = std::abs(fit.slope + beta) <= cfg.rate_tol;
      col["expected_slope"] = -beta;
      col["pass"] = pass;
      all_pass = all_pass && pass;
    } else {
      col["expected_slope"] = nullptr;
      col["pass"] = nullptr;
    }
    rep["columns"][names[c]] = col;
  }
  if (!rep.contains("columns")) rep["columns"] = nlohmann::json::object();
  rep["pass"] = all_pass;
  report << rep.dump(2) << '\n';
  log << "sweep: " << ns.size() << " degree(s), rate checks " << (all_pass ? "pass" : "FAIL") << '\n';
  return all_pass ? kOk : kCheckFailed;
}

int cmd_psi(const ExperimentConfig& cfg, std::ostream& out, std::ostream& log) {
  const auto ns = require_ns(cfg);
  int code = kOk;
  out << header_line(cfg) << '\n';
  out << "n,psi_c_oracle,psi_c_asym,psi_s_oracle,psi_s_asym,abs_diff_c,abs_diff_s,"
         "abs_diff_complex\n";
  for (std::size_t n : ns) {
    std::optional<PsiQuery> q;
    try {
      q.emplace(cfg.x, cfg.nu, n, cfg.tol);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    const auto oracle = [&](PsiPart part) {
      try {
        return psi_oracle(*q, part).value;
      } catch (const ConvergenceError& e) {
        log << "psi: n=" << n << ": " << e.what() << " (error bound "
            << format_double(e.error_bound()) << ")\n";
        code = kCheckFailed;
        return e.best_estimate();
      }
    };
    const double c = oracle(PsiPart::cos);
    const double s = oracle(PsiPart::sin);
    const double ca = n >= 1 ? psi_asym(*q, PsiPart::cos) : kNaN;
    const double sa = n >= 1 ? psi_asym(*q, PsiPart::sin) : kNaN;
    write_row(out, {static_cast<double>(n), c, ca, s, sa, std::abs(c - ca), std::abs(s - sa),
                    std::hypot(c - ca, s - sa)});
  }
  return code;
}

int cmd_superconv(const ExperimentConfig& cfg, std::ostream& out, std::ostream& log) {
  const auto ns = require_ns(cfg);
  const ModelFunction m = cfg.model_function();
  const RealFunction f = m.as_function();
  const std::size_t max_n = *std::max_element(ns.begin(), ns.end());
  if (std::find(ns.begin(), ns.end(), 0) != ns.end()) throw ConfigError("superconv needs n >= 1");
  const CoeffTable table = cheb_coeffs_quad(m, max_n, cfg.tol);
  out << header_line(cfg) << '\n';
  out << "n,y,residual,abs_err,filtered\n";
  std::size_t rows = 0;
  for (std::size_t n : ns) {
    const SuperconvSet s = superconv_set(m, n, cfg.eps);
    const ChebSeries fn = projection_series(table, n);
    for (std::size_t i = 0; i < s.points.size(); ++i) {
      const double y = s.points[i];
      const bool kept = std::find(s.filtered.begin(), s.filtered.end(), y) != s.filtered.end();
      write_row(out, {static_cast<double>(n), y, s.residuals[i], std::abs(f(y) - fn(y)),
                      kept ? 1.0 : 0.0});
      ++rows;
    }
  }
  log << "superconv: " << rows << " point(s)\n";
  return kOk;
}

int cmd_remez(const ExperimentConfig& cfg, std::ostream& out, std::ostream& log) {
  const auto ns = require_ns(cfg);
  RealFunction f;
  std::vector<double> singular;
  RemezOptions opts = remez_options(cfg);
  if (!cfg.polynomial.empty()) {
    f = [c = cfg.polynomial](double x) {
      double acc = 0.0;
      for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
      return acc;
    };
  } else {
    const ModelFunction m = cfg.model_function();
    f = m.as_function();
    singular.push_back(m.xi());
    opts.derivative = [m](double x) { return m.derivative(x); };
  }
  std::vector<std::string> docs(ns.size());
  std::vector<char> ok(ns.size(), 0);
  parallel_for(ns.size(), [&](std::size_t i) {
    const RemezResult r = best_approx(f, ns[i], opts, singular);
    docs[i] = to_json(r);
    ok[i] = r.converged ? 1 : 0;
  });
  if (docs.size() == 1) {
    out << docs.front() << '\n';
  } else {
    out << "[\n";
    for (std::size_t i = 0; i < docs.size(); ++i) out << "  " << docs[i] << (i + 1 < docs.size() ? ",\n" : "\n");
    out << "]\n";
  }
  const bool all = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
  if (!all) log << "remez: at least one run did not converge\n";
  return all ? kOk : kCheckFailed;
}

int cmd_coeffs(const ExperimentConfig& cfg, std::ostream& out, std::ostream& log) {
  const auto ns = require_ns(cfg);
  const ModelFunction m = cfg.model_function();
  const std::size_t max_k = *std::max_element(ns.begin(), ns.end());
  const CoeffTable cheb = cheb_coeffs_quad(m, max_k, cfg.tol);
  const bool leg = cfg.wants("legendre-projection");
  const CoeffTable legendre =
      leg ? legendre_coeffs_quad(m, max_k, std::max(cfg.tol, kLegendreTol)) : CoeffTable{};
  out << header_line(cfg) << '\n';
  out << "k,cheb_quad,cheb_err_est,cheb_asym,cheb_rel_diff,legendre_quad,legendre_asym\n";
  for (std::size_t k = 0; k <= max_k; ++k) {
    const double asym = k >= 1 ? cheb_coeff_asym(m, k) : kNaN;
    const double rel = k >= 1 ? std::abs(cheb.values[k] - asym) / std::abs(asym) : kNaN;
    double lq = kNaN;
    double la = kNaN;
    if (leg) {
      lq = legendre.values[k];
      if (k >= 1 && !m.endpoint_singularity()) la = legendre_coeff_asym(m, k);
    }
    write_row(out, {static_cast<double>(k), cheb.values[k], cheb.errors[k], asym, rel, lq, la});
  }
  log << "coeffs: " << max_k + 1 << " coefficient(s)\n";
  return kOk;
}

}  // namespace chebrate::cli
