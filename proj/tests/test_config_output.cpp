#include <filesystem>
#include <numbers>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "zollgeo/config.hpp"
#include "zollgeo/output.hpp"
#include "zollgeo/svg.hpp"

using namespace zollgeo;
constexpr double kPi = std::numbers::pi;

namespace {

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::string last_line(const std::string& s) {
  const auto end = s.find_last_not_of('\n');
  return s.substr(s.rfind('\n', end) + 1, end - s.rfind('\n', end));
}

}  // namespace

TEST(Config, Minimal) {
  const auto cfg = parse_config(R"({"family": "half_sine"})");
  EXPECT_EQ(cfg.metric.h().variant().index(), HFunction::half_sine().variant().index());
  EXPECT_TRUE(cfg.metric.zoll_candidate());
  EXPECT_EQ(cfg.t_grid.size(), 50u);
  EXPECT_EQ(cfg.quad_nodes, 16u);
  EXPECT_EQ(cfg.seed, 7u);
}

TEST(Config, AllKeys) {
  const auto cfg = parse_config(R"({
    "family": "odd_poly", "coeffs": [0.3, -0.1], "even_coeffs": [0.1], "label": "x",
    "integrator": {"abs_tol": 1e-9, "rel_tol": 1e-8, "max_step": 0.1, "meridian_threshold": 1e-3,
                   "pole_margin": 1e-5},
    "quad_nodes": 32, "t_grid": [0.1, 0.2, 0.3],
    "returnmap": {"nx": 4, "nalpha": 5, "horizon": 30, "match_tol": 1e-6},
    "period_horizon": 20, "period_tol": 1e-6, "n_random": 3, "seed": 99, "curvature_samples": 10})");
  EXPECT_EQ(cfg.metric.label(), "x");
  EXPECT_NEAR(eval_f(cfg.metric, 1.0), 1.0 + 0.2 + 0.1, 1e-15);
  EXPECT_EQ(cfg.integrator.abs_tol, 1e-9);
  EXPECT_EQ(cfg.integrator.rel_tol, 1e-8);
  EXPECT_EQ(cfg.integrator.max_step, 0.1);
  EXPECT_EQ(cfg.integrator.meridian_threshold, 1e-3);
  EXPECT_EQ(cfg.integrator.pole_margin, 1e-5);
  EXPECT_EQ(cfg.quad_nodes, 32u);
  EXPECT_EQ(cfg.t_grid, (std::vector<double>{0.1, 0.2, 0.3}));
  EXPECT_EQ(cfg.rm_nx, 4u);
  EXPECT_EQ(cfg.rm_nalpha, 5u);
  EXPECT_EQ(cfg.returnmap_options().horizon, 30.0);
  EXPECT_EQ(cfg.returnmap_options().match_tol, 1e-6);
  EXPECT_EQ(cfg.period_horizon, 20.0);
  EXPECT_EQ(cfg.n_random, 3u);
  EXPECT_EQ(cfg.seed, 99u);
  EXPECT_EQ(cfg.curvature_samples, 10u);
}

TEST(Config, TrigAndGridObject) {
  const auto cfg = parse_config(R"({"family": "trig_example", "k": 2, "t_grid": {"n": 5, "min": 0.1, "max": 0.5}})");
  ASSERT_EQ(cfg.t_grid.size(), 5u);
  EXPECT_DOUBLE_EQ(cfg.t_grid[2], 0.3);
  EXPECT_NEAR(eval_f(cfg.metric, std::cos(0.4)), 1.0 + std::cos(0.4) * std::sin(5 * 0.4), 1e-12);
}

TEST(Config, Errors) {
  for (const char* bad : {
           R"({"family": "half_sine", "colour": 1})",
           R"({"family": "nope"})",
           R"({"coeffs": [1]})",
           R"({"family": "trig_example"})",
           R"({"family": "trig_example", "k": -1})",
           R"({"family": "odd_poly"})",
           R"({"family": "zero", "quad_nodes": 4})",
           R"({"family": "zero", "t_grid": [0.1, 2.0]})",
           R"({"family": "zero", "t_grid": [0.1]})",
           R"({"family": "zero", "integrator": {"abs_tol": -1}})",
           R"({"family": "zero", "integrator": {"atol": 1e-9}})",
           R"({"family": "zero", "returnmap": {"nx": 1}})",
           R"({"family": "zero", "seed": "seven"})",
           R"([1, 2])",
           R"({"family": )",
       }) {
    EXPECT_THROW(parse_config(bad), ConfigError) << bad;
  }
  EXPECT_THROW(load_config("/nonexistent/config.json"), ConfigError);
}

TEST(Config, ShippedConfigsLoad) {
  std::size_t n = 0;
  for (const auto& entry : std::filesystem::directory_iterator(ZOLLGEO_CONFIG_DIR)) {
    if (entry.path().extension() != ".json") continue;
    EXPECT_NO_THROW(load_config(entry.path().string())) << entry.path();
    ++n;
  }
  EXPECT_GE(n, 6u);
}

TEST(Csv, TrajectoryAndEvents) {
  const auto m = fx::half_sine();
  const auto traj = integrate(m, {kPi / 2, 0.0, 0.7, 0.0}, 2 * kPi);
  std::ostringstream a, b;
  csv::write_trajectory(a, m, traj);
  csv::write_events(b, traj);
  EXPECT_EQ(first_line(a.str()), "s,r,theta,beta,c,energy");
  EXPECT_EQ(first_line(b.str()), "s,type,theta,direction");
  EXPECT_NE(b.str().find(",equator,"), std::string::npos);
  EXPECT_NE(b.str().find(",turning,"), std::string::npos);
  EXPECT_NE(b.str().find(",up\n"), std::string::npos);
  std::istringstream rows(a.str());
  std::string line;
  std::getline(rows, line);
  std::size_t n = 0;
  while (std::getline(rows, line)) {
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 5) << line;
    ++n;
  }
  EXPECT_EQ(n, traj.steps.size());
}

TEST(Csv, Scan) {
  std::ostringstream os;
  csv::write_scan(os, scan(fx::half_sine(), default_t_grid(10)));
  EXPECT_EQ(first_line(os.str()), "t,I,deviation");
  EXPECT_EQ(last_line(os.str()).rfind("# rotation=1/1 verdict=zoll-compatible", 0), 0u) << last_line(os.str());
}

TEST(Csv, Report) {
  std::ostringstream os;
  csv::write_report(os, build_report(fx::round_metric(), 2, 2));
  const auto s = os.str();
  EXPECT_EQ(first_line(s), "x,alpha,alpha_norm,Fx,Falpha,flight,Per,crossings,simple");
  EXPECT_NE(s.find("# m0=1\n"), std::string::npos);
  EXPECT_NE(s.find("# spectrum={1}"), std::string::npos);
  EXPECT_NE(s.find("# max_displacement="), std::string::npos);
}

TEST(Csv, ReportMarksUnresolved) {
  std::ostringstream os;
  csv::write_report(os, build_report(fx::even_control(), 2, 2));
  EXPECT_NE(os.str().find(",NA,NA,NA\n"), std::string::npos);
  EXPECT_NE(os.str().find("# m0=NA"), std::string::npos);
}

TEST(Csv, Curvature) {
  std::ostringstream os;
  csv::write_curvature(os, curvature_profile(fx::round_metric(), 3));
  EXPECT_EQ(os.str(), "r,sigma\n1e-06,1\n1.5707963267949,1\n3.14159165358979,1\n");
}

TEST(Svg, WellFormedShells) {
  svg::Series s{{0, 1, 2}, {1, 1, 1}};
  for (const auto& doc : {svg::line_plot("a<b", "x", "y", {s}),
                          svg::disk_trace("t", {svg::Curve{{{0, 0}, {0.5, 0.5}}}}, {{0.1, 0.1}}),
                          svg::arrow_field("f", "x", "y", {{1, 0.5}}, {{1.2, 0.5}}, 6.3, 1.0)}) {
    EXPECT_EQ(doc.rfind("<svg ", 0), 0u);
    EXPECT_EQ(last_line(doc), "</svg>");
  }
  EXPECT_NE(svg::line_plot("a<b", "x", "y", {s}).find("a&lt;b"), std::string::npos);
}
