#include "chebrate/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace chebrate {

namespace {

// JSON has no NaN or infinity
std::string json_number(double v) { return std::isfinite(v) ? format_double(v) : "null"; }

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

template <class Range>
std::string json_array(const Range& values) {
  std::string out = "[";
  bool first = true;
  for (double v : values) {
    if (!first) out += ", ";
    out += json_number(v);
    first = false;
  }
  return out + "]";
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_json(const Approximant& a) {
  std::ostringstream os;
  os << "{\"method\": " << json_string(to_string(a.method())) << ", \"n\": " << a.degree()
     << ", \"coeffs\": " << json_array(a.coeffs()) << ", \"provenance\": {";
  bool first = true;
  for (const auto& [key, value] : a.provenance()) {
    if (!first) os << ", ";
    os << json_string(key) << ": " << json_number(value);
    first = false;
  }
  os << "}}";
  return os.str();
}

Approximant approximant_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    const Method method = method_from_string(j.at("method").get<std::string>());
    auto coeffs = j.at("coeffs").get<std::vector<double>>();
    if (coeffs.size() != j.at("n").get<std::size_t>() + 1) {
      throw std::invalid_argument("coefficient count does not match n");
    }
    Provenance prov;
    if (j.contains("provenance")) {
      for (const auto& [key, value] : j.at("provenance").items()) {
        prov[key] = value.is_null() ? std::nan("") : value.get<double>();
      }
    }
    return Approximant(method, std::move(coeffs), std::move(prov));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed approximant JSON: ") + e.what());
  }
}

std::string to_json(const RemezResult& r) {
  std::ostringstream os;
  os << "{\"n\": " << r.poly.degree() << ", \"coeffs\": " << json_array(r.poly.coeffs())
     << ", \"reference\": " << json_array(r.reference) << ", \"h\": " << json_number(r.levelled_error)
     << ", \"E\": " << json_number(r.max_error) << ", \"iterations\": " << r.iterations
     << ", \"converged\": " << (r.converged ? "true" : "false")
     << ", \"defect\": " << json_number(r.certificate.equioscillation_defect)
     << ", \"dlvp_lower\": " << json_number(r.certificate.dlvp_lower) << "}";
  return os.str();
}

}  // namespace chebrate
