// chebrate: command-line harness for the approximation experiments.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "chebrate/errors.hpp"
#include "cli/commands.hpp"
#include "cli/config.hpp"

namespace {

using chebrate::cli::ConfigError;
using chebrate::cli::ExperimentConfig;

struct Flags {
  std::string config;
  std::string out;
  std::string report;
  std::string ns;
  std::optional<double> tol;
  std::optional<double> eps;
  std::optional<std::size_t> grid;
  std::optional<double> x;
  std::optional<double> nu;
  std::optional<double> xi;
  std::optional<double> alpha;
  std::optional<std::string> g;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config, "JSON experiment config");
  sub->add_option("--out", f.out, "output path (default: stdout)");
  sub->add_option("--tol", f.tol, "quadrature / summation tolerance");
  sub->add_option("--eps", f.eps, "superconvergence distance from the singularity");
  sub->add_option("--ns", f.ns, "degrees, comma separated");
  sub->add_option("--grid", f.grid, "measurement grid size");
  sub->add_option("--xi", f.xi, "singularity location");
  sub->add_option("--alpha", f.alpha, "singularity exponent");
  sub->add_option("--g", f.g, "smooth factor: exp, sin-exp, inv-3-minus-x, one");
}

ExperimentConfig resolve(const Flags& f) {
  nlohmann::json j = nlohmann::json::object();
  if (!f.config.empty()) j = chebrate::cli::load_config(f.config).to_json();
  if (f.xi || f.alpha || f.g) {
    if (!j.contains("model")) j["model"] = {{"xi", 0.0}, {"alpha", 1.0}, {"g", "one"}};
    if (f.xi) j["model"]["xi"] = *f.xi;
    if (f.alpha) j["model"]["alpha"] = *f.alpha;
    if (f.g) j["model"]["g"] = *f.g;
  }
  if (!f.ns.empty()) j["ns"] = chebrate::cli::parse_ns(f.ns);
  if (f.tol) j["tol"] = *f.tol;
  if (f.eps) j["eps"] = *f.eps;
  if (f.grid) j["grid"] = *f.grid;
  if (f.x) j["x"] = *f.x;
  if (f.nu) j["nu"] = *f.nu;
  ExperimentConfig cfg = chebrate::cli::config_from_json(j);
  if (!f.out.empty()) cfg.output = f.out;
  return cfg;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write '" + path + "'");
  os << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial approximation experiments for functions with an algebraic singularity"};
  app.set_version_flag("--version", CHEBRATE_VERSION);
  app.require_subcommand(1);
  Flags flags;

  auto* errcurve = app.add_subcommand("errcurve", "pointwise error curves on the measurement grid");
  auto* sweep = app.add_subcommand("sweep", "maximum errors over degrees with fitted rates");
  auto* psi = app.add_subcommand("psi", "tail sums: oracle against asymptotics");
  auto* superconv = app.add_subcommand("superconv", "superconvergence points and errors there");
  auto* remez = app.add_subcommand("remez", "best approximation with certificates (JSON)");
  auto* coeffs = app.add_subcommand("coeffs", "Chebyshev coefficients: quadrature against asymptotics");
  for (auto* sub : {errcurve, sweep, psi, superconv, remez, coeffs}) add_common(sub, flags);
  sweep->add_option("--report", flags.report, "JSON report path (default: <out>.report.json)");
  psi->add_option("--x", flags.x, "angle x");
  psi->add_option("--nu", flags.nu, "exponent nu");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : chebrate::cli::kUsage;
  }

  try {
    const ExperimentConfig cfg = resolve(flags);
    std::ostringstream out;
    int code = chebrate::cli::kOk;
    if (*errcurve) {
      code = chebrate::cli::cmd_errcurve(cfg, out, std::cerr);
    } else if (*sweep) {
      std::ostringstream report;
      code = chebrate::cli::cmd_sweep(cfg, out, report, std::cerr);
      std::string report_path = flags.report;
      if (report_path.empty() && !cfg.output.empty()) report_path = cfg.output + ".report.json";
      if (report_path.empty()) {
        std::cerr << report.str();
      } else {
        emit(report_path, report.str());
      }
    } else if (*psi) {
      code = chebrate::cli::cmd_psi(cfg, out, std::cerr);
    } else if (*superconv) {
      code = chebrate::cli::cmd_superconv(cfg, out, std::cerr);
    } else if (*remez) {
      code = chebrate::cli::cmd_remez(cfg, out, std::cerr);
    } else if (*coeffs) {
      code = chebrate::cli::cmd_coeffs(cfg, out, std::cerr);
    }
    emit(cfg.output, out.str());
    return code;
  } catch (const ConfigError& e) {
    std::cerr << "chebrate: " << e.what() << '\n';
    return chebrate::cli::kUsage;
  } catch (const std::exception& e) {
    std::cerr << "chebrate: " << e.what() << '\n';
    return chebrate::cli::kCheckFailed;
  }
}
