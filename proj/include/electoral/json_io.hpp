#ifndef ELECTORAL_JSON_IO_HPP
#define ELECTORAL_JSON_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "electoral/analysis.hpp"
#include "electoral/assumptions.hpp"
#include "electoral/solver.hpp"

namespace electoral {

/// Raised on malformed configuration; the message names the offending field.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

namespace io {

using nlohmann::json;

inline json to_json(const UtilitySpec& u) {
  switch (u.family()) {
    case UtilitySpec::Family::Quadratic:
      return {{"family", "quadratic"}};
    case UtilitySpec::Family::Exponential:
      return {{"family", "exponential"}};
    case UtilitySpec::Family::Affine:
      return {{"family", "affine"}, {"a", u.scale()}, {"b", u.shift()}, {"base", to_json(u.base())}};
  }
  return {};
}

inline UtilitySpec utility_from_json(const json& j, const std::string& path = "utility") {
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
    throw ConfigError(path + ": expected an object with a string \"family\"");
  const std::string family = j["family"].get<std::string>();
  if (family == "quadratic") return UtilitySpec::quadratic();
  if (family == "exponential") return UtilitySpec::exponential();
  if (family == "affine") {
    if (!j.contains("a") || !j["a"].is_number())
      throw ConfigError(path + ".a: missing or non-numeric affine scale");
    if (!j.contains("b") || !j["b"].is_number())
      throw ConfigError(path + ".b: missing or non-numeric affine shift");
    if (!j.contains("base")) throw ConfigError(path + ".base: missing base utility");
    UtilitySpec base = utility_from_json(j["base"], path + ".base");
    try {
      return UtilitySpec::affine(std::move(base), j["a"].get<double>(), j["b"].get<double>());
    } catch (const DomainError& e) {
      throw ConfigError(path + ": " + e.what());
    }
  }
  throw ConfigError(path + ".family: unknown utility family \"" + family + "\"");
}

inline json to_json(const MedianBelief& b) {
  switch (b.family()) {
    case MedianBelief::Family::Uniform:
      return {{"family", "uniform"}};
    case MedianBelief::Family::Triangular:
      return {{"family", "triangular"}, {"mode", b.mode()}};
    case MedianBelief::Family::Power:
      return {{"family", "power"}, {"k", b.exponent()}};
    case MedianBelief::Family::Numeric: {
      json samples = json::array();
      for (const auto& [x, f] : b.samples()) samples.push_back(json::array({x, f}));
      return {{"family", "numeric"}, {"samples", samples}};
    }
  }
  return {};
}

inline MedianBelief belief_from_json(const json& j, const std::string& path = "belief") {
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
    throw ConfigError(path + ": expected an object with a string \"family\"");
  const std::string family = j["family"].get<std::string>();
  try {
    if (family == "uniform") return MedianBelief::uniform();
    if (family == "triangular") {
      if (!j.contains("mode") || !j["mode"].is_number())
        throw ConfigError(path + ".mode: missing or non-numeric triangular mode");
      return MedianBelief::triangular(j["mode"].get<double>());
    }
    if (family == "power") {
      if (!j.contains("k") || !j["k"].is_number())
        throw ConfigError(path + ".k: missing or non-numeric power exponent");
      return MedianBelief::power(j["k"].get<double>());
    }
    if (family == "numeric") {
      if (!j.contains("samples") || !j["samples"].is_array())
        throw ConfigError(path + ".samples: missing or non-array samples");
      std::vector<std::pair<double, double>> samples;
      for (const auto& s : j["samples"]) {
        if (!s.is_array() || s.size() != 2 || !s[0].is_number() || !s[1].is_number())
          throw ConfigError(path + ".samples: each sample must be a numeric [x, f] pair");
        samples.emplace_back(s[0].get<double>(), s[1].get<double>());
      }
      return MedianBelief::numeric(std::move(samples));
    }
  } catch (const DomainError& e) {
    throw ConfigError(path + ": " + e.what());
  }
  throw ConfigError(path + ".family: unknown belief family \"" + family + "\"");
}

struct ModelConfig {
  ElectionModel model;
  SolverOptions solver;
};

inline ModelConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");
  if (!j.contains("utility")) throw ConfigError("utility: missing");
  if (!j.contains("belief")) throw ConfigError("belief: missing");
  if (!j.contains("ideals") || !j["ideals"].is_object())
    throw ConfigError("ideals: missing or not an object");
  const json& ideals = j["ideals"];
  if (!ideals.contains("t_l") || !ideals["t_l"].is_number())
    throw ConfigError("ideals.t_l: missing or non-numeric");
  if (!ideals.contains("t_r") || !ideals["t_r"].is_number())
    throw ConfigError("ideals.t_r: missing or non-numeric");

  UtilitySpec utility = utility_from_json(j["utility"]);
  MedianBelief belief = belief_from_json(j["belief"]);
  IdealPair pair = [&] {
    try {
      return IdealPair(ideals["t_l"].get<double>(), ideals["t_r"].get<double>());
    } catch (const DomainError& e) {
      throw ConfigError(std::string("ideals: ") + e.what());
    }
  }();

  ModelConfig cfg{ElectionModel{std::move(utility), std::move(belief), pair}, SolverOptions{}};
  if (j.contains("solver")) {
    const json& s = j["solver"];
    if (!s.is_object()) throw ConfigError("solver: expected an object");
    auto num = [&](const char* key, double fallback) {
      if (!s.contains(key)) return fallback;
      if (!s[key].is_number()) throw ConfigError(std::string("solver.") + key + ": non-numeric");
      return s[key].get<double>();
    };
    cfg.solver.br.grid_size =
        static_cast<std::size_t>(num("grid_size", static_cast<double>(cfg.solver.br.grid_size)));
    cfg.solver.br.refine_tol = num("refine_tol", cfg.solver.br.refine_tol);
    cfg.solver.br.tie_tol = num("tie_tol", cfg.solver.br.tie_tol);
    cfg.solver.fixpoint_tol = num("fixpoint_tol", cfg.solver.fixpoint_tol);
    cfg.solver.max_iters =
        static_cast<std::size_t>(num("max_iters", static_cast<double>(cfg.solver.max_iters)));
    cfg.solver.monotonicity_tol = num("monotonicity_tol", cfg.solver.monotonicity_tol);
  }
  return cfg;
}

inline json to_json(const ModelConfig& cfg) {
  return {{"utility", to_json(cfg.model.utility)},
          {"belief", to_json(cfg.model.belief)},
          {"ideals", {{"t_l", cfg.model.ideals.t_l}, {"t_r", cfg.model.ideals.t_r}}},
          {"solver",
           {{"grid_size", cfg.solver.br.grid_size},
            {"refine_tol", cfg.solver.br.refine_tol},
            {"tie_tol", cfg.solver.br.tie_tol},
            {"fixpoint_tol", cfg.solver.fixpoint_tol},
            {"max_iters", cfg.solver.max_iters},
            {"monotonicity_tol", cfg.solver.monotonicity_tol}}}};
}

inline json to_json(const CertificateReport& r, const std::string& assumption) {
  json j{{"assumption", assumption},
         {"passed", r.passed},
         {"tuples_checked", r.tuples_checked},
         {"margin", r.margin == std::numeric_limits<double>::infinity() ? json() : json(r.margin)}};
  j["witness"] = r.witness ? json(*r.witness) : json();
  return j;
}

}  // namespace io
}  // namespace electoral

#endif  // ELECTORAL_JSON_IO_HPP
