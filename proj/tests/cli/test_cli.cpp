#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "chebrate/tails.hpp"
#include "cli/commands.hpp"
#include "cli/config.hpp"

using namespace chebrate;
using namespace chebrate::cli;
namespace fs = std::filesystem;

namespace {

struct Csv {
  std::string comment;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  [[nodiscard]] std::size_t col(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    FAIL("missing column " << name);
    return 0;
  }
  [[nodiscard]] double num(std::size_t row, const std::string& name) const {
    return std::stod(rows.at(row).at(col(name)));
  }
};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

Csv parse(const std::string& text) {
  Csv c;
  std::stringstream ss(text);
  std::string line;
  std::getline(ss, c.comment);
  std::getline(ss, line);
  c.header = split(line);
  while (std::getline(ss, line)) {
    if (!line.empty()) c.rows.push_back(split(line));
  }
  return c;
}

ExperimentConfig config(const std::string& text) { return config_from_json(nlohmann::json::parse(text)); }

int run(const std::string& args) {
  const std::string cmd = std::string(CHEBRATE_BIN) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("config parsing") {
  const auto c = config(R"({"model": {"xi": 0.25, "alpha": 1.5, "g": "exp"}, "ns": [8, 16]})");
  CHECK(c.model->g == "exp");
  CHECK(c.grid == 10001);
  CHECK(c.wants("minimax"));
  CHECK(c.hash().size() == 16);
  CHECK(c.hash() == config_from_json(c.to_json()).hash());
  CHECK(c.hash() != config(R"({"model": {"xi": 0.25, "alpha": 1.5, "g": "exp"}, "ns": [8]})").hash());
  CHECK_THROWS_AS(config(R"({"modle": {}})"), ConfigError);
  CHECK_THROWS_AS(config(R"({"model": {"xi": 0.0, "alpha": 2.0, "g": "one"}})"), ConfigError);
  CHECK_THROWS_AS(config(R"({"model": {"xi": 1.0, "alpha": 1.0, "g": "one"}})"), ConfigError);
  CHECK_THROWS_AS(config(R"({"model": {"xi": 0.0, "alpha": 1.0, "g": "cosh"}})"), ConfigError);
  CHECK_THROWS_AS(config(R"({"methods": ["spline"]})"), ConfigError);
  CHECK(parse_ns("32,64, 128") == std::vector<std::size_t>{32, 64, 128});
  CHECK_THROWS_AS((void)parse_ns("32,x"), ConfigError);
  CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
}

TEST_CASE("errcurve") {
  std::ostringstream out;
  std::ostringstream log;
  const auto cfg = config(R"({"model": {"xi": 0.5, "alpha": 1.0, "g": "one"}, "ns": [100],
                              "methods": ["cheb-projection"], "grid": 2001})");
  CHECK(cmd_errcurve(cfg, out, log) == kOk);
  const Csv csv = parse(out.str());
  CHECK(csv.comment == header_line(cfg));
  CHECK(csv.rows.size() == 2002);
  bool found = false;
  for (std::size_t r = 0; r < csv.rows.size(); ++r) {
    if (csv.num(r, "x") != 0.5) continue;
    found = true;
    const double fn_err = csv.num(r, "fn_err");
    CHECK(std::abs(fn_err - csv.num(r, "predicted_fn_err")) <= 0.25 * fn_err);
    CHECK(std::isnan(csv.num(r, "pstar_err")));
  }
  CHECK(found);
}

TEST_CASE("errcurve pstar column peaks at the reference point x = 0") {
  std::ostringstream out;
  std::ostringstream log;
  const auto cfg = config(R"({"model": {"xi": 0.0, "alpha": 1.0, "g": "one"}, "ns": [10],
                              "methods": ["minimax"], "grid": 4001})");
  REQUIRE(cmd_errcurve(cfg, out, log) == kOk);
  const Csv csv = parse(out.str());
  double worst = 0.0;
  double at0 = -1.0;
  for (std::size_t r = 0; r < csv.rows.size(); ++r) {
    worst = std::max(worst, csv.num(r, "pstar_err"));
    if (csv.num(r, "x") == 0.0) at0 = csv.num(r, "pstar_err");
  }
  CHECK(std::abs(at0 - worst) <= 1e-6);
}

TEST_CASE("sweep report") {
  std::ostringstream csv_out;
  std::ostringstream report;
  std::ostringstream log;
  const auto cfg = config(R"({"model": {"xi": 0.25, "alpha": 2.5, "g": "exp"}, "eps": 0.1,
                              "ns": [128, 256, 512, 1024, 2048],
                              "methods": ["cheb-projection", "superconv"], "rate_tol": 0.25})");
  const int code = cmd_sweep(cfg, csv_out, report, log);
  const auto rep = nlohmann::json::parse(report.str());
  const double fn = rep["columns"]["maxerr_fn"]["slope"];
  const double sc = rep["columns"]["maxerr_superconv"]["slope"];
  CHECK(std::abs(fn + 2.5) <= 0.15);
  CHECK(std::abs(sc + 4.5) <= 0.25);
  CHECK(rep["pass"] == true);
  CHECK(code == kOk);
  const Csv csv = parse(csv_out.str());
  CHECK(csv.rows.size() == 5);
  CHECK(csv.header.at(0) == "n");
  CHECK(std::isnan(csv.num(0, "maxerr_pstar")));
}

TEST_CASE("sweep limit constant and minimax ratio") {
  std::ostringstream csv_out;
  std::ostringstream report;
  std::ostringstream log;
  const auto cfg = config(R"({"model": {"xi": 0.0, "alpha": 1.0, "g": "one"},
                              "ns": [256, 512, 1024, 2048], "methods": ["cheb-projection"]})");
  CHECK(cmd_sweep(cfg, csv_out, report, log) == kOk);
  const Csv csv = parse(csv_out.str());
  CHECK(std::abs(2048 * csv.num(3, "maxerr_fn") - 0.636620) <= 0.02 * 0.636620);

  std::ostringstream c2;
  std::ostringstream r2;
  const auto both = config(R"({"model": {"xi": 0.0, "alpha": 1.0, "g": "one"},
                               "ns": [8, 16, 32, 64], "methods": ["cheb-projection", "minimax"]})");
  (void)cmd_sweep(both, c2, r2, log);
  const Csv t = parse(c2.str());
  std::vector<double> ratio;
  for (std::size_t r = 0; r < 4; ++r) ratio.push_back(t.num(r, "maxerr_fn") / t.num(r, "maxerr_pstar"));
  CHECK(std::abs(ratio[3] - 2.27) < std::abs(ratio[0] - 2.27) + 1e-3);
  CHECK(std::abs(ratio[3] - 2.27) <= 0.15);
}

TEST_CASE("psi") {
  std::ostringstream out;
  std::ostringstream log;
  auto cfg = config(R"({"ns": [10, 20, 40], "x": 3.141592653589793, "nu": 1.5})");
  CHECK(cmd_psi(cfg, out, log) == kOk);
  Csv csv = parse(out.str());
  for (std::size_t r = 0; r < csv.rows.size(); ++r) CHECK(csv.num(r, "psi_s_oracle") == 0.0);

  std::ostringstream zero;
  cfg = config(R"({"ns": [10], "x": 0.0, "nu": 1.5})");
  CHECK(cmd_psi(cfg, zero, log) == kOk);
  csv = parse(zero.str());
  CHECK(csv.num(0, "psi_c_oracle") == doctest::Approx(hurwitz_zeta(2.5, 11.0)).epsilon(1e-12));

  std::ostringstream one;
  cfg = config(R"({"ns": [32, 64, 128, 256, 512], "x": 1.0, "nu": 1.5})");
  CHECK(cmd_psi(cfg, one, log) == kOk);
  csv = parse(one.str());
  std::vector<double> ns;
  std::vector<double> d;
  for (std::size_t r = 0; r < csv.rows.size(); ++r) {
    ns.push_back(csv.num(r, "n"));
    d.push_back(csv.num(r, "abs_diff_complex"));
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double lx = std::log(ns[i]);
    const double ly = std::log(d[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double k = double(ns.size());
  CHECK(std::abs((k * sxy - sx * sy) / (k * sxx - sx * sx) + 3.5) <= 0.3);
}

TEST_CASE("superconv") {
  std::ostringstream out;
  std::ostringstream log;
  auto cfg = config(R"({"model": {"xi": 1.0, "alpha": 1.5, "g": "one"}, "ns": [2], "eps": 0.01})");
  CHECK(cmd_superconv(cfg, out, log) == kOk);
  Csv csv = parse(out.str());
  REQUIRE(csv.rows.size() == 2);
  CHECK(csv.num(0, "y") == doctest::Approx(0.309017).epsilon(1e-6));
  CHECK(csv.num(1, "y") == doctest::Approx(-0.809017).epsilon(1e-6));

  std::ostringstream none;
  cfg = config(R"({"model": {"xi": 0.25, "alpha": 1.5, "g": "one"}, "ns": [1]})");
  CHECK(cmd_superconv(cfg, none, log) == kOk);
  CHECK(parse(none.str()).rows.empty());

  std::ostringstream fifty;
  cfg = config(R"({"model": {"xi": 0.25, "alpha": 2.5, "g": "exp"}, "ns": [50], "eps": 0.1})");
  CHECK(cmd_superconv(cfg, fifty, log) == kOk);
  csv = parse(fifty.str());
  std::ostringstream sweep_csv;
  std::ostringstream rep;
  cfg = config(R"({"model": {"xi": 0.25, "alpha": 2.5, "g": "exp"}, "ns": [50],
                   "methods": ["cheb-projection"]})");
  (void)cmd_sweep(cfg, sweep_csv, rep, log);
  const double maxerr = parse(sweep_csv.str()).num(0, "maxerr_fn");
  int filtered = 0;
  for (std::size_t r = 0; r < csv.rows.size(); ++r) {
    if (csv.num(r, "filtered") != 1.0) continue;
    ++filtered;
    CHECK(csv.num(r, "abs_err") <= maxerr);
  }
  CHECK(filtered > 30);
}

TEST_CASE("remez command") {
  std::ostringstream out;
  std::ostringstream log;
  auto cfg = config(R"({"model": {"xi": 0.0, "alpha": 1.0, "g": "one"}, "ns": [1]})");
  CHECK(cmd_remez(cfg, out, log) == kOk);
  auto j = nlohmann::json::parse(out.str());
  CHECK(j["E"].get<double>() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(j["reference"] == nlohmann::json::array({-1.0, 0.0, 1.0}));

  std::ostringstream cube;
  cfg = config(R"({"polynomial": [0, 0, 0, 1], "ns": [3]})");
  CHECK(cmd_remez(cfg, cube, log) == kOk);
  j = nlohmann::json::parse(cube.str());
  CHECK(j["E"].get<double>() <= 1e-12);

  std::ostringstream fifty;
  cfg = config(R"({"model": {"xi": 0.0, "alpha": 1.0, "g": "one"}, "ns": [50]})");
  CHECK(cmd_remez(cfg, fifty, log) == kOk);
  j = nlohmann::json::parse(fifty.str());
  CHECK(50 * j["E"].get<double>() >= 0.266);
  CHECK(50 * j["E"].get<double>() <= 0.294);
}

TEST_CASE("coeffs command") {
  std::ostringstream out;
  std::ostringstream log;
  const auto cfg = config(R"({"model": {"xi": 0.0, "alpha": 1.0, "g": "one"}, "ns": [8]})");
  CHECK(cmd_coeffs(cfg, out, log) == kOk);
  const Csv csv = parse(out.str());
  REQUIRE(csv.rows.size() == 9);
  CHECK(csv.num(0, "cheb_quad") == doctest::Approx(4.0 / std::numbers::pi));
  CHECK(std::abs(csv.num(1, "cheb_quad")) <= 1e-13);
}

TEST_CASE("binary exit codes and output files") {
  const fs::path dir = fs::temp_directory_path() / "chebrate_cli_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const fs::path out = dir / "curve.csv";
  const std::string base = "errcurve --xi 0 --alpha 1 --g one --grid 101 --out " + out.string();

  CHECK(run("errcurve --xi 0 --alpha 1 --ns '' --out " + out.string()) == 2);
  CHECK_FALSE(fs::exists(out));
  CHECK(run("errcurve --xi 0 --alpha 2 --ns 4 --out " + out.string()) == 2);
  CHECK(run("bogus") == 2);
  CHECK(run("errcurve --config " + (dir / "missing.json").string() + " --ns 4") == 2);

  CHECK(run(base + " --ns 4,8") == 0);
  const std::string first = slurp(out);
  CHECK(run(base + " --ns 4,8") == 0);
  CHECK(slurp(out) == first);
  CHECK(first.rfind("# chebrate ", 0) == 0);

  const fs::path cfg = dir / "cfg.json";
  std::ofstream(cfg) << R"({"model": {"xi": 0.25, "alpha": 1.5, "g": "exp"},
                           "methods": ["cheb-projection"], "ns": [32, 64, 128, 256]})";
  const fs::path sweep = dir / "sweep.csv";
  CHECK(run("sweep --config " + cfg.string() + " --out " + sweep.string()) == 0);
  CHECK(fs::exists(sweep.string() + ".report.json"));
  // an impossible tolerance on the rate check fails it
  std::ofstream(cfg) << R"({"model": {"xi": 0.25, "alpha": 1.5, "g": "exp"}, "rate_tol": 1e-6,
                           "methods": ["cheb-projection"], "ns": [32, 64, 128, 256]})";
  CHECK(run("sweep --config " + cfg.string() + " --out " + sweep.string()) == 1);
  fs::remove_all(dir);
}
