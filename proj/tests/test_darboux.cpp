#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "zollgeo/darboux.hpp"

using namespace zollgeo;
constexpr double kPi = std::numbers::pi;

using fx::raw_darboux;

TEST(DarbouxIntegral, RoundIsPi) {
  EXPECT_NEAR(darboux_integral(fx::round_metric(), kPi / 4).value, kPi, 1e-13);
}

TEST(DarbouxIntegral, HalfSine) {
  const auto v = darboux_integral(fx::half_sine(), 0.3);
  EXPECT_NEAR(v.value, kPi, 1e-10);
  EXPECT_TRUE(v.converged);
  EXPECT_NEAR(raw_darboux(fx::half_sine(), 0.3), kPi, 1e-8);
}

TEST(DarbouxIntegral, EvenControlAgainstOracles) {
  const auto m = fx::even_control();
  std::vector<double> vals;
  for (const double t : {0.3, 0.6, 1.2}) {
    const double v = darboux_integral(m, t).value;
    EXPECT_NEAR(v, raw_darboux(m, t), 1e-8) << t;
    EXPECT_NEAR(v, fx::even_control_darboux(t), 1e-12) << t;
    vals.push_back(v);
  }
  EXPECT_GT(std::abs(vals[0] - vals[2]), 1e-3);
}

TEST(DarbouxIntegral, RawOracleTwentySamples) {
  const std::vector<MetricOfRevolution> ms{fx::half_sine(), fx::trig(1), fx::odd_poly(), fx::even_control(),
                                           MetricOfRevolution(HFunction::odd_polynomial({0.2}),
                                                              EvenPerturbation({0.05, -0.02}))};
  int n = 0;
  for (const auto& m : ms) {
    for (const double t : {0.05, 0.4, 0.9, 1.4}) {
      EXPECT_NEAR(darboux_integral(m, t).value, raw_darboux(m, t), 1e-8) << m.label() << " t=" << t;
      ++n;
    }
  }
  EXPECT_EQ(n, 20);
}

TEST(DarbouxIntegral, DomainErrors) {
  EXPECT_THROW(darboux_integral(fx::half_sine(), 0.0), DomainError);
  EXPECT_THROW(darboux_integral(fx::half_sine(), kPi / 2), DomainError);
  EXPECT_THROW(darboux_integral(fx::half_sine(), 0.5, 7), DomainError);
}

TEST(DarbouxIntegral, ConvergenceUnderDoubling) {
  for (const auto& m : {fx::half_sine(), fx::trig(1), fx::even_control()}) {
    for (const double t : {0.02, 0.3, 1.0}) {
      double prev = INFINITY;
      for (std::size_t n = 8; n <= 128; n *= 2) {
        const double change = darboux_integral(m, t, n).doubling_change;
        if (prev > 1e-13) {
          EXPECT_LE(change, prev * 1.01 + 1e-15) << m.label() << " t=" << t << " n=" << n;
        }
        prev = change;
      }
      EXPECT_LT(prev, 1e-12) << m.label() << " t=" << t;
    }
  }
}

TEST(DarbouxIntegral, OddPartAnnihilated) {
  for (const auto& m : {fx::half_sine(), fx::trig(0), fx::trig(1), fx::trig(2), fx::odd_poly()}) {
    for (const double t : {0.01, 0.2, 0.7, 1.5})
      EXPECT_NEAR(darboux_integral(m, t).value, darboux_integral(fx::round_metric(), t).value, 1e-10)
          << m.label() << " t=" << t;
  }
}

TEST(DarbouxIntegral, SymmetricUnderNegatingH) {
  const MetricOfRevolution a(HFunction::odd_polynomial({0.3, -0.1}), EvenPerturbation({0.1}));
  const MetricOfRevolution b(HFunction::odd_polynomial({-0.3, 0.1}), EvenPerturbation({0.1}));
  for (const double t : {0.1, 0.5, 1.3})
    EXPECT_NEAR(darboux_integral(a, t).value, darboux_integral(b, t).value, 1e-12);
}

TEST(RationalApprox, Examples) {
  EXPECT_EQ(rational_approx(1.0, 100), (Rational{1, 1}));
  EXPECT_EQ(rational_approx(1.5, 10), (Rational{3, 2}));
  EXPECT_FALSE(rational_approx(std::sqrt(2.0), 20, 1e-9).has_value());
  EXPECT_EQ(rational_approx(std::sqrt(2.0), 20, 1e-2), (Rational{17, 12}));
  EXPECT_EQ(rational_approx(22.0 / 7.0, 10), (Rational{22, 7}));
}

TEST(RationalApprox, Errors) {
  EXPECT_THROW(rational_approx(0.0, 10), DomainError);
  EXPECT_THROW(rational_approx(1.0, 0), DomainError);
}

TEST(Scan, HalfSineZollCompatible) {
  const auto sc = scan(fx::half_sine(), default_t_grid(50));
  EXPECT_EQ(sc.grid.size(), 50u);
  EXPECT_LT(sc.max_deviation, 1e-8);
  ASSERT_TRUE(sc.rotation_number.has_value());
  EXPECT_EQ(*sc.rotation_number, (Rational{1, 1}));
  EXPECT_EQ(sc.verdict, DarbouxVerdict::ZollCompatible);
  for (const auto& p : sc.grid) EXPECT_GT(p.value, 0.0);
}

TEST(Scan, RoundIdenticalValues) {
  const auto sc = scan(fx::round_metric(), default_t_grid(50));
  for (const auto& p : sc.grid) EXPECT_NEAR(p.value, kPi, 1e-13);
  EXPECT_EQ(sc.verdict, DarbouxVerdict::ZollCompatible);
}

TEST(Scan, EvenControlNonConstant) {
  const auto sc = scan(fx::even_control(), default_t_grid(50));
  EXPECT_EQ(sc.verdict, DarbouxVerdict::NonConstant);
  EXPECT_GT(sc.max_deviation, 1e-3);
  EXPECT_FALSE(sc.rotation_number.has_value());
}

TEST(Scan, Errors) { EXPECT_THROW(scan(fx::half_sine(), {0.5}), DomainError); }

TEST(Scan, DefaultGrid) {
  const auto g = default_t_grid(50, 0.01);
  EXPECT_DOUBLE_EQ(g.front(), 0.01);
  EXPECT_DOUBLE_EQ(g.back(), kPi / 2 - 0.01);
}

TEST(DarbouxVsDynamics, Examples) {
  const auto a = darboux_vs_dynamics(fx::round_metric(), 0.5);
  EXPECT_NEAR(a.integral, kPi, 1e-12);
  EXPECT_LT(a.difference, 1e-6);
  EXPECT_LT(darboux_vs_dynamics(fx::half_sine(), 0.7).difference, 1e-5);
  const auto c = darboux_vs_dynamics(fx::even_control(), 0.5);
  EXPECT_LT(c.difference, 1e-5);
  EXPECT_GT(std::abs(c.measured - kPi), 1e-3);
}

TEST(DarbouxVsDynamics, Errors) {
  EXPECT_THROW(darboux_vs_dynamics(fx::half_sine(), 1e-4), DomainError);
}
