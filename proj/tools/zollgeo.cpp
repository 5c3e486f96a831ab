// zollgeo command-line front end.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "zollgeo/zollgeo.hpp"

namespace fs = std::filesystem;
using namespace zollgeo;

namespace {

enum Exit : int { Pass = 0, Fail = 1, ParseError = 2, RuntimeError = 3 };

struct Common {
  std::string config;
  std::string out = ".";
  std::optional<std::uint64_t> seed;
};

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  os << text;
}

template <class Fn>
std::string to_text(Fn&& fn) {
  std::ostringstream os;
  fn(os);
  return os.str();
}

fs::path out_dir(const Common& c) {
  fs::path dir(c.out);
  fs::create_directories(dir);
  return dir;
}

RunConfig load(const Common& c) {
  auto cfg = load_config(c.config);
  if (c.seed) cfg.seed = *c.seed;
  return cfg;
}

std::string label_of(const RunConfig& cfg) {
  return cfg.metric.label().empty() ? cfg.metric.h().describe() : cfg.metric.label();
}

// ---------------------------------------------------------------------------

int cmd_metric(const Common& c) {
  const auto cfg = load(c);
  const auto& m = cfg.metric;
  const auto rep = validate(m);
  fmt::print("metric: {}\n", label_of(cfg));
  fmt::print("max|h| = {:.12g} at u = {:.6g}; min f = {:.12g}\n", rep.max_abs_h, rep.max_abs_h_at, rep.min_f);
  for (const auto& v : rep.violations)
    fmt::print("violation: {} at u = {:.6g} (value {:.6g})\n", to_string(v.invariant), v.witness_u, v.value);

  CurvatureProfile prof;
  if (m.zoll_candidate()) {
    prof = curvature_profile(m, cfg.curvature_samples, cfg.integrator.pole_margin);
  } else {
    // no closed form with an even part; central differences on a slightly narrower range
    const double margin = 1e-3, step = 1e-4;
    for (std::size_t i = 0; i < cfg.curvature_samples; ++i) {
      const double r = margin + (pi - 2 * margin) * static_cast<double>(i) /
                                    static_cast<double>(cfg.curvature_samples - 1);
      prof.samples.push_back({r, numerical_gauss_curvature(m, r, step)});
    }
  }
  const auto dir = out_dir(c);
  write_file(dir / "curvature_profile.csv", to_text([&](std::ostream& os) { csv::write_curvature(os, prof); }));
  svg::Series s;
  for (const auto& p : prof.samples) {
    s.x.push_back(p.r);
    s.y.push_back(p.sigma);
  }
  write_file(dir / "curvature_profile.svg",
             svg::line_plot("Gauss curvature: " + label_of(cfg), "r", "sigma", {s}));
  fmt::print("sigma in [{:.12g}, {:.12g}] over {} samples\n", prof.min(), prof.max(), prof.samples.size());
  fmt::print("validation: {}\n", rep.ok() ? "PASS" : "FAIL");
  return rep.ok() ? Pass : Fail;
}

// ---------------------------------------------------------------------------

struct GeodesicArgs {
  double r0 = half_pi;
  double theta0 = 0.0;
  double beta0 = pi / 4;
  double length = two_pi;
};

int cmd_geodesic(const Common& c, const GeodesicArgs& a) {
  const auto cfg = load(c);
  const auto& m = cfg.metric;
  const auto traj = integrate(m, {a.r0, a.theta0, a.beta0, 0.0}, a.length, cfg.integrator);
  const auto dir = out_dir(c);
  write_file(dir / "trajectory.csv", to_text([&](std::ostream& os) { csv::write_trajectory(os, m, traj); }));
  write_file(dir / "events.csv", to_text([&](std::ostream& os) { csv::write_events(os, traj); }));

  // orthographic view from slightly above the equator plane
  const double tilt = 0.35;
  auto project = [&](double r, double theta) {
    const auto p = embed(r, theta);
    const double y = p[2] * std::cos(tilt) - p[1] * std::sin(tilt);
    const double depth = p[1] * std::cos(tilt) + p[2] * std::sin(tilt);
    return std::pair{std::pair{p[0], y}, depth <= 0.0};
  };
  std::vector<svg::Curve> curves;
  {
    svg::Curve front{{}, "#888888", true}, back{{}, "#cccccc", true};
    for (int i = 0; i <= 360; ++i) {
      const auto [pt, vis] = project(half_pi, two_pi * i / 360.0);
      (vis ? front : back).points.push_back(pt);
    }
    curves.push_back(back);
    curves.push_back(front);
  }
  std::optional<bool> run_vis;
  for (const auto& rec : traj.steps) {
    const auto [pt, vis] = project(rec.r, rec.theta);
    if (!run_vis || *run_vis != vis) {
      if (!curves.back().points.empty() && run_vis) curves.back().points.push_back(pt);
      curves.push_back({{}, vis ? "#1f77b4" : "#aec7e8", false});
      run_vis = vis;
    }
    curves.back().points.push_back(pt);
  }
  std::vector<std::pair<double, double>> marks;
  for (const auto& e : traj.of_type(EventType::EquatorCrossing)) marks.push_back(project(e.r, e.theta).first);
  write_file(dir / "geodesic.svg", svg::disk_trace("Geodesic: " + label_of(cfg), curves, marks));

  fmt::print("integrated s in [0, {:.12g}], {} steps, c = {:.12g}\n", traj.s_end, traj.steps.size(),
             traj.initial.clairaut());
  fmt::print("events: {} equator crossings, {} turning points\n", traj.count(EventType::EquatorCrossing),
             traj.count(EventType::TurningPoint));
  fmt::print("max energy drift {:.3g}, max Clairaut drift {:.3g}\n", traj.diagnostics.max_energy_drift,
             traj.diagnostics.max_clairaut_drift);
  return Pass;
}

// ---------------------------------------------------------------------------

ScanOptions scan_options(const RunConfig& cfg) {
  ScanOptions o;
  o.n_nodes = cfg.quad_nodes;
  return o;
}

void write_scan_files(const fs::path& dir, const std::string& label, const DarbouxScan& sc) {
  write_file(dir / "darboux_scan.csv", to_text([&](std::ostream& os) { csv::write_scan(os, sc); }));
  svg::Series s, ref{{}, {}, "#999999", false};
  for (const auto& p : sc.grid) {
    s.x.push_back(p.t);
    s.y.push_back(p.value);
  }
  ref.x = {sc.grid.front().t, sc.grid.back().t};
  ref.y = {pi, pi};
  s.markers = true;
  write_file(dir / "darboux_scan.svg", svg::line_plot("Darboux integral: " + label, "t", "I(t)", {ref, s}));
}

int cmd_darboux(const Common& c) {
  const auto cfg = load(c);
  const auto sc = scan(cfg.metric, cfg.t_grid, scan_options(cfg));
  write_scan_files(out_dir(c), label_of(cfg), sc);
  fmt::print("I(t): mean {:.15g}, max deviation {:.3g} over {} points\n", sc.mean, sc.max_deviation, sc.grid.size());
  fmt::print("rotation number: {}\n", sc.rotation_number ? sc.rotation_number->str() : "undetermined");
  fmt::print("verdict: {}\n", to_string(sc.verdict));
  if (!sc.all_converged) fmt::print("warning: quadrature did not converge at every grid point\n");
  return Pass;
}

// ---------------------------------------------------------------------------

void write_report_files(const fs::path& dir, const std::string& label, const ReturnMapReport& rep) {
  write_file(dir / "returnmap_report.csv", to_text([&](std::ostream& os) { csv::write_report(os, rep); }));
  std::vector<std::pair<double, double>> base, tip;
  for (const auto& s : rep.samples) {
    if (s.orbit.empty()) continue;
    base.emplace_back(s.v.x, s.v.alpha_norm());
    tip.emplace_back(s.v.x + wrap_signed(s.Fv.x - s.v.x), s.Fv.alpha_norm());
  }
  write_file(dir / "returnmap.svg",
             svg::arrow_field("Return map v -> F(v): " + label, "x", "alpha / pi", base, tip, two_pi, 1.0));
}

int cmd_returnmap(const Common& c) {
  const auto cfg = load(c);
  const auto rep = build_report(cfg.metric, cfg.rm_nx, cfg.rm_nalpha, cfg.returnmap_options());
  write_report_files(out_dir(c), label_of(cfg), rep);
  fmt::print("samples {}: resolved {}, unresolved {}, simple {}\n", rep.samples.size(), rep.resolved,
             rep.unresolved, rep.simple_count);
  std::string spectrum;
  for (const int p : rep.spectrum) spectrum += (spectrum.empty() ? "" : ",") + std::to_string(p);
  fmt::print("m0 = {}, spectrum {{{}}}\n", rep.m0 ? std::to_string(*rep.m0) : "NA", spectrum);
  fmt::print("max |F(v) - v| = {:.3g}, max |F^m0(v) - v| = {:.3g}\n", rep.max_first_return_displacement,
             rep.max_displacement);
  if (rep.non_p_behavior()) fmt::print("some orbits do not close within the horizon: not a P-metric\n");
  return Pass;
}

// ---------------------------------------------------------------------------

int cmd_zoll_verify(const Common& c) {
  const auto cfg = load(c);
  const auto& m = cfg.metric;
  const auto dir = out_dir(c);
  nlohmann::ordered_json rep;
  rep["metric"] = label_of(cfg);
  rep["seed"] = cfg.seed;
  rep["n_random"] = cfg.n_random;
  bool pass = true;
  std::string first_failure;
  auto record = [&](const char* stage, bool ok) {
    rep["stages"][stage]["pass"] = ok;
    fmt::print("{:<20} {}\n", stage, ok ? "PASS" : "FAIL");
    if (!ok && first_failure.empty()) first_failure = stage;
    pass = pass && ok;
  };
  auto guarded = [&](const char* stage, auto&& body) {
    try {
      record(stage, body(rep["stages"][stage]));
    } catch (const std::exception& e) {
      rep["stages"][stage]["error"] = e.what();
      record(stage, false);
    }
  };

  guarded("validation", [&](auto& j) {
    const auto v = validate(m);
    j["max_abs_h"] = v.max_abs_h;
    j["min_f"] = v.min_f;
    j["zoll_candidate"] = m.zoll_candidate();
    for (const auto& x : v.violations) j["violations"].push_back({{"invariant", to_string(x.invariant)}, {"u", x.witness_u}});
    return v.ok();
  });

  guarded("darboux", [&](auto& j) {
    const auto sc = scan(m, cfg.t_grid, scan_options(cfg));
    write_scan_files(dir, label_of(cfg), sc);
    j["mean"] = sc.mean;
    j["max_deviation"] = sc.max_deviation;
    j["rotation_number"] = sc.rotation_number ? sc.rotation_number->str() : "undetermined";
    j["verdict"] = to_string(sc.verdict);
    return sc.verdict == DarbouxVerdict::ZollCompatible && std::abs(sc.mean - pi) < 1e-8;
  });

  // periods and self-intersections share the seeded initial states
  const auto initials = sample_initial_states(cfg.n_random, cfg.seed);
  std::vector<PeriodEstimate> periods(initials.size());
  std::vector<std::optional<std::size_t>> crossings(initials.size());
  std::ostringstream pcsv;
  pcsv << "index,r0,theta0,beta0,c,closed,period,return_error,self_intersections\n";
  guarded("periods", [&](auto& j) {
    bool ok = true;
    double worst = 0.0;
    for (std::size_t i = 0; i < initials.size(); ++i) {
      periods[i] = find_period(m, initials[i], cfg.period_horizon, cfg.period_tol, cfg.integrator);
      const bool good = periods[i].closed && std::abs(periods[i].period - two_pi) < 1e-4 &&
                        periods[i].return_error < 1e-5;
      if (periods[i].closed) worst = std::max(worst, std::abs(periods[i].period - two_pi));
      ok = ok && good;
    }
    std::size_t closed = 0;
    for (const auto& p : periods) closed += p.closed ? 1 : 0;
    j["closed"] = closed;
    j["max_period_error"] = worst;
    return ok;
  });

  guarded("self_intersections", [&](auto& j) {
    std::size_t total = 0, checked = 0;
    for (std::size_t i = 0; i < initials.size(); ++i) {
      if (!periods[i].closed) continue;
      const double P = periods[i].period;
      const auto traj = integrate(m, initials[i], P + 0.1, cfg.integrator);
      crossings[i] = self_intersections(m, traj, 0.0, P).count;
      total += *crossings[i];
      ++checked;
    }
    j["checked"] = checked;
    j["total"] = total;
    return checked == initials.size() && total == 0;
  });

  for (std::size_t i = 0; i < initials.size(); ++i) {
    const auto& st = initials[i];
    pcsv << fmt::format("{},{},{},{},{},{},{},{},{}\n", i, csv::num(st.r), csv::num(st.theta), csv::num(st.beta),
                        csv::num(st.clairaut()), periods[i].closed ? 1 : 0,
                        periods[i].closed ? csv::num(periods[i].period) : "NA",
                        csv::num(periods[i].return_error),
                        crossings[i] ? std::to_string(*crossings[i]) : "NA");
  }
  write_file(dir / "zoll_periods.csv", pcsv.str());

  guarded("return_map", [&](auto& j) {
    const auto r = build_report(m, cfg.rm_nx, cfg.rm_nalpha, cfg.returnmap_options());
    write_report_files(dir, label_of(cfg), r);
    j["max_first_return_displacement"] = r.max_first_return_displacement;
    j["resolved"] = r.resolved;
    j["unresolved"] = r.unresolved;
    j["m0"] = r.m0 ? nlohmann::json(*r.m0) : nlohmann::json(nullptr);
    return r.unresolved == 0 && r.max_first_return_displacement < 1e-5;
  });

  rep["verdict"] = pass ? "PASS" : "FAIL";
  if (!pass) rep["first_failure"] = first_failure;
  write_file(dir / "zoll_report.json", rep.dump(2) + "\n");
  if (pass)
    fmt::print("zoll-verify: PASS\n");
  else
    fmt::print("zoll-verify: FAIL ({} stage)\n", first_failure);
  return pass ? Pass : Fail;
}

// ---------------------------------------------------------------------------

int cmd_rp2(const Common& c) {
  const auto cfg = load(c);
  const auto& m = cfg.metric;
  const auto v = rp2_descent_check(m);
  if (!v.descends) {
    fmt::print("rp2: obstructed\n");
    fmt::print("witness u = {:.12g}, |f(u) - f(-u)| = {:.12g}\n", v.witness_u, v.asymmetry);
    fmt::print("no metric of revolution with odd h != 0 is invariant under the antipodal map; "
               "the only Zoll metric of revolution on RP^2 is the round one\n");
    return Pass;
  }
  fmt::print("rp2: descends (max |f(u) - f(-u)| = {:.3g})\n", v.asymmetry);
  if (m.h().is_zero() && m.e().is_zero()) {
    const auto prof = curvature_profile(m, cfg.curvature_samples, cfg.integrator.pole_margin);
    fmt::print("curvature in [{:.15g}, {:.15g}]\n", prof.min(), prof.max());
    std::ostringstream os;
    os << "index,r0,theta0,beta0,period,crossings,return_error\n";
    const auto initials = sample_initial_states(10, cfg.seed);
    for (std::size_t i = 0; i < initials.size(); ++i) {
      const auto& st = initials[i];
      const auto q = quotient_crossings_round_rp2(m, st, cfg.integrator);
      os << fmt::format("{},{},{},{},{},{},{}\n", i, csv::num(st.r), csv::num(st.theta), csv::num(st.beta),
                        csv::num(q.period), q.crossings, csv::num(q.return_error));
      fmt::print("  initial {}: period {:.12f}, crossings with equator image {}\n", i, q.period, q.crossings);
    }
    write_file(out_dir(c) / "rp2_report.csv", os.str());
    return Pass;
  }
  const auto sc = scan(m, cfg.t_grid, scan_options(cfg));
  fmt::print("Darboux scan on the quotient's cover: verdict {}, max deviation {:.3g}\n", to_string(sc.verdict),
             sc.max_deviation);
  if (sc.verdict != DarbouxVerdict::ZollCompatible)
    fmt::print("this metric lives on RP^2 but not all of its geodesics close with a common period\n");
  return Pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed geodesics on spheres of revolution"};
  app.require_subcommand(1);
  Common common;
  GeodesicArgs gargs;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", common.config, "JSON metric/run config")->required();
    sub->add_option("--out", common.out, "output directory");
    sub->add_option("--seed", common.seed, "override the config seed");
  };
  auto* metric = app.add_subcommand("metric", "validate the metric and write its curvature profile");
  auto* geodesic = app.add_subcommand("geodesic", "integrate one geodesic");
  auto* darboux = app.add_subcommand("darboux", "scan the Darboux integral over t");
  auto* returnmap = app.add_subcommand("returnmap", "build the equatorial return-map report");
  auto* zoll = app.add_subcommand("zoll-verify", "composite Zoll verification");
  auto* rp2 = app.add_subcommand("rp2", "check descent to the projective plane");
  for (auto* sub : {metric, geodesic, darboux, returnmap, zoll, rp2}) add_common(sub);
  geodesic->add_option("--r0", gargs.r0, "initial colatitude");
  geodesic->add_option("--theta0", gargs.theta0, "initial longitude");
  geodesic->add_option("--beta0", gargs.beta0, "initial heading from d/dtheta");
  geodesic->add_option("--length", gargs.length, "arc length to integrate")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return ParseError;
  }

  try {
    if (*metric) return cmd_metric(common);
    if (*geodesic) return cmd_geodesic(common, gargs);
    if (*darboux) return cmd_darboux(common);
    if (*returnmap) return cmd_returnmap(common);
    if (*zoll) return cmd_zoll_verify(common);
    if (*rp2) return cmd_rp2(common);
  } catch (const ConfigError& e) {
    fmt::print(stderr, "config error: {}\n", e.what());
    return ParseError;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return RuntimeError;
  }
  return ParseError;
}
