#include "cli/config.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "chebrate/errors.hpp"

namespace chebrate::cli {

namespace {

template <class T>
T get(const nlohmann::json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError(std::string("config key '") + key + "' is missing or has the wrong type");
  }
}

}  // namespace

const std::vector<std::string>& known_methods() {
  static const std::vector<std::string> names{"cheb-projection", "legendre-projection",
                                              "interp-first",    "interp-second",
                                              "minimax",         "superconv",
                                              "diff"};
  return names;
}

bool ExperimentConfig::wants(const std::string& method) const {
  return methods.empty() || std::find(methods.begin(), methods.end(), method) != methods.end();
}

ModelFunction ExperimentConfig::model_function() const {
  if (!model) throw ConfigError("config has no model");
  try {
    return make_model(model->xi, model->alpha, model->g);
  } catch (const InvalidModel& e) {
    throw ConfigError(std::string("invalid model: ") + e.what());
  }
}

nlohmann::json ExperimentConfig::to_json() const {
  nlohmann::json j;
  if (model) j["model"] = {{"xi", model->xi}, {"alpha", model->alpha}, {"g", model->g}};
  if (!polynomial.empty()) j["polynomial"] = polynomial;
  j["methods"] = methods;
  j["ns"] = ns;
  j["grid"] = grid;
  j["eps"] = eps;
  j["tol"] = tol;
  j["x"] = x;
  j["nu"] = nu;
  j["rate_tol"] = rate_tol;
  j["grid_density"] = grid_density;
  return j;
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string ExperimentConfig::hash() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(to_json().dump())));
  return buf;
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  static const std::set<std::string> keys{"model", "polynomial", "methods", "ns",
                                          "grid",  "eps",        "tol",     "output",
                                          "x",     "nu",         "rate_tol", "grid_density"};
  for (const auto& [key, value] : j.items()) {
    if (!keys.contains(key)) throw ConfigError("unknown config key '" + key + "'");
  }
  ExperimentConfig c;
  if (j.contains("model")) {
    const auto& m = j.at("model");
    if (!m.is_object()) throw ConfigError("config key 'model' must be an object");
    ModelSpec spec;
    spec.xi = get<double>(m, "xi");
    spec.alpha = get<double>(m, "alpha");
    spec.g = m.contains("g") ? get<std::string>(m, "g") : "one";
    c.model = spec;
    (void)c.model_function();  // admissibility and registry check
  }
  if (j.contains("polynomial")) c.polynomial = get<std::vector<double>>(j, "polynomial");
  if (j.contains("methods")) c.methods = get<std::vector<std::string>>(j, "methods");
  for (const auto& m : c.methods) {
    const auto& known = known_methods();
    if (std::find(known.begin(), known.end(), m) == known.end()) {
      throw ConfigError("unknown method '" + m + "'");
    }
  }
  if (j.contains("ns")) c.ns = get<std::vector<std::size_t>>(j, "ns");
  if (j.contains("grid")) c.grid = get<std::size_t>(j, "grid");
  if (j.contains("eps")) c.eps = get<double>(j, "eps");
  if (j.contains("tol")) c.tol = get<double>(j, "tol");
  if (j.contains("output")) c.output = get<std::string>(j, "output");
  if (j.contains("x")) c.x = get<double>(j, "x");
  if (j.contains("nu")) c.nu = get<double>(j, "nu");
  if (j.contains("rate_tol")) c.rate_tol = get<double>(j, "rate_tol");
  if (j.contains("grid_density")) c.grid_density = get<std::size_t>(j, "grid_density");
  if (c.grid < 2) throw ConfigError("grid must be at least 2");
  if (!(c.eps > 0.0)) throw ConfigError("eps must be positive");
  if (!(c.tol >= 1e-13)) throw ConfigError("tol must be at least 1e-13");
  if (c.grid_density < 2) throw ConfigError("grid_density must be at least 2");
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  try {
    return config_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
}

std::vector<std::size_t> parse_ns(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      throw ConfigError("--ns expects comma-separated non-negative integers");
    }
    if (used != item.size() || item.front() == '-') {
      throw ConfigError("--ns expects comma-separated non-negative integers");
    }
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

}  // namespace chebrate::cli
