#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "chebrate/model.hpp"

namespace chebrate::cli {

/// Bad configuration or command line; maps to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ModelSpec {
  double xi = 0.0;
  double alpha = 1.0;
  std::string g = "one";
};

struct ExperimentConfig {
  std::optional<ModelSpec> model;
  /// Monomial coefficients c_0 + c_1 x + ...; an alternative target for remez.
  std::vector<double> polynomial;
  std::vector<std::string> methods;
  std::vector<std::size_t> ns;
  std::size_t grid = 10001;
  double eps = 0.1;
  double tol = 1e-12;
  std::string output;
  double x = 1.0;
  double nu = 1.5;
  double rate_tol = 0.2;
  std::size_t grid_density = 30;

  [[nodiscard]] bool wants(const std::string& method) const;
  [[nodiscard]] ModelFunction model_function() const;
  [[nodiscard]] nlohmann::json to_json() const;
  /// FNV-1a of the canonical JSON dump, as 16 hex digits.
  [[nodiscard]] std::string hash() const;
};

/// Method names accepted in "methods".
[[nodiscard]] const std::vector<std::string>& known_methods();

/// Parses and validates; unknown keys, bad types and inadmissible models raise ConfigError.
[[nodiscard]] ExperimentConfig config_from_json(const nlohmann::json& j);
[[nodiscard]] ExperimentConfig load_config(const std::string& path);

/// "32,64,128" -> {32, 64, 128}.
[[nodiscard]] std::vector<std::size_t> parse_ns(const std::string& text);

[[nodiscard]] std::uint64_t fnv1a(const std::string& text);

}  // namespace chebrate::cli
