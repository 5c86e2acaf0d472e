#pragma once

#include <string>
#include <vector>

#include "jpencil/pencil.hpp"

namespace jpencil {

/// Parsed form of the JSON pencil config. Band sources hold unparsed scalar
/// strings; build_pencil() parses them in the chosen scalar mode.
///
/// Full form:
///   {"scalar_mode": "quadext", "radicand": 2,
///    "alpha": "1*sqrt(2)", "beta": "1*sqrt(2)",
///    "a": {"kind": "constant", "value": "1*sqrt(2)"},
///    "b": {"kind": "explicit-list", "values": ["2", "2"]},
///    "gamma_seq": {"kind": "eventually-periodic", "values": ["1"], "period": ["2", "3"]},
///    ...}
/// Builtins: {"builtin": "theta1", ...} and
///   {"builtin": "oprl_square", "a": {...}, "b": {...}, ...}.
struct SourceSpec {
  std::string kind;  // "constant" | "explicit-list" | "eventually-periodic"
  std::vector<std::string> values;
  std::vector<std::string> period;
};

struct PencilConfig {
  std::string scalar_mode = "f64";  // "f64" | "rational" | "quadext"
  long long radicand = 0;           // required in quadext mode
  std::string builtin;              // "", "theta1", "oprl_square"
  std::string alpha;
  std::string beta;
  SourceSpec a, b, alpha_seq, beta_seq, gamma_seq;
};

/// Parses the JSON text; throws ConfigError on malformed input.
PencilConfig parse_pencil_config(const std::string& json_text);

/// Reads and parses a config file.
PencilConfig load_pencil_config(const std::string& path);

namespace detail {

template <class S>
CoefficientSource<S> parse_source(const SourceSpec& spec, const char* band) {
  auto parse_all = [](const std::vector<std::string>& in) {
    std::vector<S> out;
    out.reserve(in.size());
    for (const auto& s : in) out.push_back(scalar_parse<S>(s));
    return out;
  };
  if (spec.kind == "constant") {
    if (spec.values.size() != 1) {
      throw ConfigError(std::string(band) + ": constant source needs exactly one value");
    }
    return CoefficientSource<S>::constant(scalar_parse<S>(spec.values[0]));
  }
  if (spec.kind == "explicit-list") {
    if (spec.values.empty()) {
      throw ConfigError(std::string(band) + ": explicit-list source needs values");
    }
    return CoefficientSource<S>::explicit_list(parse_all(spec.values));
  }
  if (spec.kind == "eventually-periodic") {
    if (spec.period.empty()) {
      throw ConfigError(std::string(band) + ": eventually-periodic source needs a period");
    }
    return CoefficientSource<S>::eventually_periodic(parse_all(spec.values),
                                                     parse_all(spec.period));
  }
  throw ConfigError(std::string(band) + ": unknown source kind '" + spec.kind + "'");
}

}  // namespace detail

/// Materializes a pencil with sequences defined for indices 0..max_index.
template <class S>
JacobiPencil<S> build_pencil(const PencilConfig& cfg, long max_index) {
  if (max_index < 0) throw ConfigError("max_index must be >= 0");
  const std::size_t count = static_cast<std::size_t>(max_index) + 1;

  if (cfg.builtin == "theta1") {
    if constexpr (std::is_same_v<S, Rational>) {
      throw ConfigError("theta1 needs sqrt(2): use quadext (radicand 2) or f64 mode");
    } else {
      if constexpr (std::is_same_v<S, QuadExt>) {
        if (cfg.radicand != 0 && cfg.radicand != 2) {
          throw ConfigError("theta1 in quadext mode requires radicand 2, got " +
                            std::to_string(cfg.radicand));
        }
      }
      return theta1_pencil<S>(max_index);
    }
  }
  if (cfg.builtin == "oprl_square") {
    const auto a_src = detail::parse_source<S>(cfg.a, "a");
    const auto b_src = detail::parse_source<S>(cfg.b, "b");
    // J5 bands lose two indices to the products; extend the inputs so the
    // result reaches max_index on every band.
    return from_oprl(a_src.take(count + 2), b_src.take(count + 2));
  }
  if (!cfg.builtin.empty()) {
    throw ConfigError("unknown builtin '" + cfg.builtin + "'");
  }

  JacobiPencil<S> p;
  p.a = detail::parse_source<S>(cfg.a, "a").take(count);
  p.b = detail::parse_source<S>(cfg.b, "b").take(count);
  p.alpha_seq = detail::parse_source<S>(cfg.alpha_seq, "alpha_seq").take(count);
  p.beta_seq = detail::parse_source<S>(cfg.beta_seq, "beta_seq").take(count);
  p.gamma_seq = detail::parse_source<S>(cfg.gamma_seq, "gamma_seq").take(count);
  p.alpha = scalar_parse<S>(cfg.alpha);
  p.beta = scalar_parse<S>(cfg.beta);
  return p;
}

}  // namespace jpencil
