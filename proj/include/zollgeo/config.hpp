#pragma once

// JSON run configuration. Schema (all keys except "family" optional):
//
//   {
//     "family": "odd_poly" | "trig_example" | "half_sine" | "zero",
//     "coeffs": [c1, c3, c5, ...],        // odd_poly: h(u) = c1 u + c3 u^3 + ...
//     "k": 1,                             // trig_example: h(cos r) = cos r sin((2k+1) r)
//     "even_coeffs": [e2, e4, ...],       // e(u) = e2 u^2 + e4 u^4 + ...
//     "label": "text",
//     "integrator": {"abs_tol": 1e-10, "rel_tol": 1e-10, "max_step": 0.0628,
//                    "meridian_threshold": 1e-4, "pole_margin": 1e-6},
//     "quad_nodes": 16,
//     "t_grid": {"n": 50, "min": 0.01, "max": 1.5608} | [t0, t1, ...],
//     "returnmap": {"nx": 8, "nalpha": 8, "horizon": 50.27, "match_tol": 1e-5},
//     "period_horizon": 25.13, "period_tol": 1e-5,
//     "n_random": 20, "seed": 7, "curvature_samples": 100
//   }

#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "zollgeo/darboux.hpp"
#include "zollgeo/errors.hpp"
#include "zollgeo/geodesics.hpp"
#include "zollgeo/metric.hpp"
#include "zollgeo/returnmap.hpp"

namespace zollgeo {

struct RunConfig {
  MetricOfRevolution metric;
  IntegratorOptions integrator;
  std::size_t quad_nodes = 16;
  std::vector<double> t_grid = default_t_grid();
  std::size_t rm_nx = 8;
  std::size_t rm_nalpha = 8;
  double rm_horizon = 16.0 * pi;
  double rm_match_tol = 1e-5;
  double period_horizon = 8.0 * pi;
  double period_tol = 1e-5;
  std::size_t n_random = 20;
  std::uint64_t seed = 7;
  std::size_t curvature_samples = 100;

  ReturnMapOptions returnmap_options() const {
    ReturnMapOptions o;
    o.horizon = rm_horizon;
    o.match_tol = rm_match_tol;
    o.integrator = integrator;
    return o;
  }
};

namespace detail {

inline void reject_unknown(const nlohmann::json& j, const std::set<std::string>& allowed,
                           const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) throw ConfigError("unknown key '" + it.key() + "' in " + where);
}

inline double positive(const nlohmann::json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  const double v = j.at(key).get<double>();
  if (!(v > 0.0)) throw ConfigError(std::string("'") + key + "' must be positive");
  return v;
}

inline std::size_t count(const nlohmann::json& j, const char* key, std::size_t fallback,
                         std::size_t minimum) {
  if (!j.contains(key)) return fallback;
  const auto v = j.at(key).get<std::int64_t>();
  if (v < static_cast<std::int64_t>(minimum))
    throw ConfigError(std::string("'") + key + "' must be at least " + std::to_string(minimum));
  return static_cast<std::size_t>(v);
}

}  // namespace detail

inline MetricOfRevolution metric_from_json(const nlohmann::json& j) {
  if (!j.contains("family")) throw ConfigError("missing 'family'");
  const auto family = j.at("family").get<std::string>();
  HFunction h;
  if (family == "zero") {
    h = HFunction::zero();
  } else if (family == "half_sine") {
    h = HFunction::half_sine();
  } else if (family == "trig_example") {
    if (!j.contains("k")) throw ConfigError("trig_example requires 'k'");
    const auto k = j.at("k").get<std::int64_t>();
    if (k < 0) throw ConfigError("'k' must be nonnegative");
    h = HFunction::trig_example(static_cast<unsigned>(k));
  } else if (family == "odd_poly") {
    if (!j.contains("coeffs")) throw ConfigError("odd_poly requires 'coeffs'");
    h = HFunction::odd_polynomial(j.at("coeffs").get<std::vector<double>>());
  } else {
    throw ConfigError("unknown family '" + family + "'");
  }
  EvenPerturbation e;
  if (j.contains("even_coeffs")) e = EvenPerturbation(j.at("even_coeffs").get<std::vector<double>>());
  std::string label = j.value("label", std::string{});
  return MetricOfRevolution(std::move(h), std::move(e), std::move(label));
}

inline RunConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  try {
    detail::reject_unknown(j,
                           {"family", "coeffs", "k", "even_coeffs", "label", "integrator",
                            "quad_nodes", "t_grid", "returnmap", "period_horizon", "period_tol",
                            "n_random", "seed", "curvature_samples"},
                           "config");
    RunConfig cfg;
    cfg.metric = metric_from_json(j);
    if (j.contains("integrator")) {
      const auto& ji = j.at("integrator");
      detail::reject_unknown(ji, {"abs_tol", "rel_tol", "max_step", "meridian_threshold", "pole_margin"},
                             "integrator");
      auto& o = cfg.integrator;
      o.abs_tol = detail::positive(ji, "abs_tol", o.abs_tol);
      o.rel_tol = detail::positive(ji, "rel_tol", o.rel_tol);
      o.max_step = detail::positive(ji, "max_step", o.max_step);
      o.meridian_threshold = detail::positive(ji, "meridian_threshold", o.meridian_threshold);
      o.pole_margin = detail::positive(ji, "pole_margin", o.pole_margin);
    }
    cfg.quad_nodes = detail::count(j, "quad_nodes", cfg.quad_nodes, 8);
    if (j.contains("t_grid")) {
      const auto& jt = j.at("t_grid");
      if (jt.is_array()) {
        cfg.t_grid = jt.get<std::vector<double>>();
      } else {
        detail::reject_unknown(jt, {"n", "min", "max"}, "t_grid");
        const auto n = detail::count(jt, "n", 50, 2);
        const double lo = jt.value("min", 0.01), hi = jt.value("max", half_pi - 0.01);
        cfg.t_grid.resize(n);
        for (std::size_t i = 0; i < n; ++i)
          cfg.t_grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
      }
      if (cfg.t_grid.size() < 2) throw ConfigError("'t_grid' needs at least 2 points");
      for (const double t : cfg.t_grid)
        if (!(t > 0.0 && t < half_pi)) throw ConfigError("'t_grid' points must lie in (0, pi/2)");
    }
    if (j.contains("returnmap")) {
      const auto& jr = j.at("returnmap");
      detail::reject_unknown(jr, {"nx", "nalpha", "horizon", "match_tol"}, "returnmap");
      cfg.rm_nx = detail::count(jr, "nx", cfg.rm_nx, 2);
      cfg.rm_nalpha = detail::count(jr, "nalpha", cfg.rm_nalpha, 2);
      cfg.rm_horizon = detail::positive(jr, "horizon", cfg.rm_horizon);
      cfg.rm_match_tol = detail::positive(jr, "match_tol", cfg.rm_match_tol);
    }
    cfg.period_horizon = detail::positive(j, "period_horizon", cfg.period_horizon);
    cfg.period_tol = detail::positive(j, "period_tol", cfg.period_tol);
    cfg.n_random = detail::count(j, "n_random", cfg.n_random, 1);
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.curvature_samples = detail::count(j, "curvature_samples", cfg.curvature_samples, 2);
    return cfg;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

inline RunConfig parse_config(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return config_from_json(j);
}

inline RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace zollgeo
