#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "zollgeo/darboux.hpp"
#include "zollgeo/returnmap.hpp"

using namespace zollgeo;
constexpr double kPi = std::numbers::pi;

TEST(FirstReturn, RoundIsIdentity) {
  const auto s = first_return(fx::round_metric(), {1.0, kPi / 3});
  EXPECT_LT(annulus_distance(s.Fv, s.v), 1e-8);
  EXPECT_NEAR(s.flight, 2 * kPi, 1e-8);
}

TEST(FirstReturn, HalfSineGridIdentity) {
  for (const auto& v : annulus_grid(4, 4)) {
    const auto s = first_return(fx::half_sine(), v);
    EXPECT_LT(annulus_distance(s.Fv, v), 1e-5) << v.x << "," << v.alpha;
  }
}

TEST(FirstReturn, EvenControlAdvanceIsTwiceDarboux) {
  // c = cos(alpha) on the equator, and the turning colatitude t has sin t = |c|
  const auto m = fx::even_control();
  const AnnulusPoint v{0.0, kPi / 4};
  const auto s = first_return(m, v);
  const double t = std::asin(std::abs(std::cos(v.alpha)));
  const double expected = wrap_positive(2.0 * fx::even_control_darboux(t));
  EXPECT_NEAR(wrap_signed(s.Fv.x - expected), 0.0, 1e-7);
  EXPECT_NEAR(s.Fv.alpha, v.alpha, 1e-8);
  EXPECT_GT(annulus_distance(s.Fv, v), 0.1);
  const auto dyn = darboux_vs_dynamics(m, t);
  EXPECT_NEAR(wrap_signed(s.Fv.x - 2.0 * dyn.measured), 0.0, 1e-6);
}

TEST(FirstReturn, Errors) {
  const auto m = fx::half_sine();
  EXPECT_THROW(first_return(m, {0.0, 5e-5}), DomainError);
  EXPECT_THROW(first_return(m, {0.0, kPi - 5e-5}), DomainError);
  EXPECT_THROW(first_return(MetricOfRevolution(HFunction::odd_polynomial({2.0})), {0.0, 1.0}), PreconditionError);
  ReturnMapOptions o;
  o.horizon = 1.0;
  EXPECT_THROW(first_return(m, {0.0, 1.0}, o), NoReturnError);
}

TEST(PerAndCrossings, Round) {
  const auto s = per_and_crossings(fx::round_metric(), {2.0, kPi / 4});
  ASSERT_TRUE(s.per && s.crossings);
  EXPECT_EQ(*s.per, 1);
  EXPECT_EQ(*s.crossings, 2);
  EXPECT_TRUE(s.relation_holds());
  EXPECT_TRUE(s.simple.value_or(false));
}

TEST(PerAndCrossings, TrigSixteenPoints) {
  for (const auto& v : annulus_grid(4, 4)) {
    const auto s = per_and_crossings(fx::trig(1), v);
    ASSERT_TRUE(s.per && s.crossings) << v.x << "," << v.alpha;
    EXPECT_EQ(*s.per, 1);
    EXPECT_EQ(*s.crossings, 2);
    EXPECT_NEAR(s.period, 2 * kPi, 1e-6);
  }
}

TEST(PerAndCrossings, EvenControlUnresolved) {
  const auto s = per_and_crossings(fx::even_control(), {0.0, kPi / 4});
  EXPECT_FALSE(s.per.has_value());
  EXPECT_FALSE(s.crossings.has_value());
  EXPECT_GE(s.orbit.size(), 5u);
}

TEST(Boundary, DisplacementVanishesAtTangency) {
  for (const auto& m : {fx::round_metric(), fx::half_sine(), fx::even_control()}) {
    double prev = INFINITY;
    for (const double a : {1e-1, 1e-2, 1e-3}) {
      const auto s = first_return(m, {0.0, a});
      const double d = annulus_distance(s.Fv, s.v);
      EXPECT_LE(d, prev + 1e-9) << m.label();
      prev = d;
      if (a == 1e-3) {
        EXPECT_NEAR(s.flight, 2 * kPi, 1e-5) << m.label();
      }
    }
    EXPECT_LT(prev, 1e-6) << m.label();
  }
}

TEST(Report, HalfSine) {
  const auto rep = build_report(fx::half_sine(), 8, 8);
  ASSERT_EQ(rep.samples.size(), 64u);
  ASSERT_TRUE(rep.m0.has_value());
  EXPECT_EQ(*rep.m0, 1);
  EXPECT_EQ(rep.spectrum, (std::set<int>{1}));
  EXPECT_TRUE(rep.spectrum_ok);
  EXPECT_LT(rep.max_displacement, 1e-5);
  EXPECT_LT(rep.max_first_return_displacement, 1e-5);
  EXPECT_EQ(rep.simple_count, 64u);
  EXPECT_TRUE(rep.relation_holds_everywhere);
  EXPECT_TRUE(rep.injective);
  EXPECT_FALSE(rep.non_p_behavior());
  EXPECT_EQ(rep.boundary.size(), 6u);
}

TEST(Report, RoundFlights) {
  const auto rep = build_report(fx::round_metric(), 8, 8);
  EXPECT_EQ(rep.resolved, 64u);
  for (const auto& s : rep.samples) EXPECT_NEAR(s.flight, 2 * kPi, 1e-6);
  EXPECT_LT(rep.max_first_return_displacement, 1e-5);
}

TEST(Report, EvenControlFlagsNonP) {
  const auto rep = build_report(fx::even_control(), 8, 8);
  EXPECT_GT(rep.unresolved, rep.samples.size() / 2);
  EXPECT_TRUE(rep.non_p_behavior());
  EXPECT_TRUE(rep.injective);
  // resolved samples still obey the spectrum and crossing relations
  EXPECT_TRUE(rep.spectrum_ok);
  EXPECT_TRUE(rep.relation_holds_everywhere);
}

TEST(Report, GridTooSmall) {
  EXPECT_THROW(build_report(fx::half_sine(), 1, 8), DomainError);
  EXPECT_THROW(build_report(fx::half_sine(), 8, 1), DomainError);
}

TEST(Annulus, GridAndNormalization) {
  const auto g = annulus_grid(8, 8);
  ASSERT_EQ(g.size(), 64u);
  for (const auto& v : g) {
    EXPECT_GT(v.alpha_norm(), 0.0);
    EXPECT_LT(v.alpha_norm(), 1.0);
    EXPECT_GE(v.x, 0.0);
    EXPECT_LT(v.x, 2 * kPi);
  }
  EXPECT_NEAR(annulus_distance({0.01, 1.0}, {2 * kPi - 0.01, 1.0}), 0.02, 1e-12);
}
