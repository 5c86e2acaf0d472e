#include "jpencil/pencil_config.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace jpencil {

namespace {

using nlohmann::json;

std::string scalar_field(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number_float()) {
    std::ostringstream os;
    os.precision(17);
    os << v.get<double>();
    return os.str();
  }
  throw ConfigError(std::string("field '") + key + "' must be a scalar string or number");
}

std::vector<std::string> scalar_list(const json& j, const char* key) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.at(key).size(); ++i) {
    const auto& v = j.at(key).at(i);
    if (v.is_string()) {
      out.push_back(v.get<std::string>());
    } else if (v.is_number_integer()) {
      out.push_back(std::to_string(v.get<long long>()));
    } else {
      throw ConfigError(std::string("entries of '") + key + "' must be scalar strings");
    }
  }
  return out;
}

SourceSpec parse_source_spec(const json& j, const char* band) {
  if (!j.is_object() || !j.contains("kind")) {
    throw ConfigError(std::string("band '") + band + "' needs an object with a 'kind'");
  }
  SourceSpec spec;
  spec.kind = j.at("kind").get<std::string>();
  if (spec.kind == "constant") {
    spec.values.push_back(scalar_field(j, "value"));
  } else {
    if (j.contains("values")) spec.values = scalar_list(j, "values");
    if (j.contains("period")) spec.period = scalar_list(j, "period");
  }
  return spec;
}

}  // namespace

PencilConfig parse_pencil_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  try {
    PencilConfig cfg;
    if (j.contains("scalar_mode")) cfg.scalar_mode = j.at("scalar_mode").get<std::string>();
    if (cfg.scalar_mode != "f64" && cfg.scalar_mode != "rational" &&
        cfg.scalar_mode != "quadext") {
      throw ConfigError("scalar_mode must be one of f64|rational|quadext");
    }
    if (j.contains("radicand")) cfg.radicand = j.at("radicand").get<long long>();
    if (cfg.scalar_mode == "quadext" && cfg.radicand == 0) {
      throw ConfigError("quadext mode requires a 'radicand'");
    }

    if (j.contains("builtin")) {
      cfg.builtin = j.at("builtin").get<std::string>();
      if (cfg.builtin == "oprl_square") {
        cfg.a = parse_source_spec(j.at("a"), "a");
        cfg.b = parse_source_spec(j.at("b"), "b");
      }
      return cfg;
    }

    cfg.alpha = scalar_field(j, "alpha");
    cfg.beta = scalar_field(j, "beta");
    cfg.a = parse_source_spec(j.at("a"), "a");
    cfg.b = parse_source_spec(j.at("b"), "b");
    cfg.alpha_seq = parse_source_spec(j.at("alpha_seq"), "alpha_seq");
    cfg.beta_seq = parse_source_spec(j.at("beta_seq"), "beta_seq");
    cfg.gamma_seq = parse_source_spec(j.at("gamma_seq"), "gamma_seq");
    return cfg;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed pencil config: ") + e.what());
  }
}

PencilConfig load_pencil_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open pencil config '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_pencil_config(buf.str());
}

}  // namespace jpencil
