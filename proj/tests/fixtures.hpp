#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "zollgeo/intersections.hpp"
#include "zollgeo/metric.hpp"

namespace fx {

using namespace zollgeo;

inline MetricOfRevolution round_metric() { return MetricOfRevolution::round(); }
inline MetricOfRevolution half_sine() { return MetricOfRevolution(HFunction::half_sine()); }
inline MetricOfRevolution trig(unsigned k) { return MetricOfRevolution(HFunction::trig_example(k)); }
inline MetricOfRevolution odd_poly() { return MetricOfRevolution(HFunction::odd_polynomial({0.3, -0.1})); }
/// f = 1 + 0.1 u^2: the non-Zoll control.
inline MetricOfRevolution even_control() {
  return MetricOfRevolution(HFunction::zero(), EvenPerturbation({0.1}), "even 0.1u^2");
}

inline std::vector<MetricOfRevolution> zoll_family() {
  return {round_metric(), half_sine(), trig(1), odd_poly()};
}

// Independent closed forms written out by hand.
inline double half_sine_h(double u) { return u * (1.0 - u * u) / 2.0; }
inline double half_sine_dh(double u) { return (1.0 - 3.0 * u * u) / 2.0; }
inline double half_sine_sigma(double r) {
  const double u = std::cos(r), h = half_sine_h(u);
  return (1.0 + h - u * half_sine_dh(u)) / std::pow(1.0 + h, 3);
}
/// I(t) for f = 1 + 0.1 u^2; the u^2 term integrates in elementary terms.
inline double even_control_darboux(double t) { return std::numbers::pi + 0.1 * std::numbers::pi * (1.0 - std::sin(t)); }

// Raw form int_t^{pi-t} f(cos r) sin t / (sin r sqrt(sin^2 r - sin^2 t)) dr by adaptive
// Gauss-Kronrod. Each half is mapped with r = t + v^2 (resp. pi - t - v^2) so the inverse
// square root at the turning point becomes a bounded integrand.
inline double raw_darboux(const MetricOfRevolution& m, double t) {
  constexpr double pi = std::numbers::pi;
  const double st = std::sin(t);
  auto kernel = [&](double r, double dist) {
    // sin^2 r - sin^2 t = sin(r - t) sin(r + t), written with the distance to the end point
    const double gap = std::sin(dist) * std::sin(2 * t + dist);
    return m.f_of_r(r) * st / (std::sin(r) * std::sqrt(gap));
  };
  const double vmax = std::sqrt(pi / 2 - t);
  auto lower = [&](double v) { return kernel(t + v * v, v * v) * 2 * v; };
  auto upper = [&](double v) { return kernel(pi - t - v * v, v * v) * 2 * v; };
  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  return GK::integrate(lower, 0.0, vmax, 15, 1e-14) + GK::integrate(upper, 0.0, vmax, 15, 1e-14);
}

// Lemniscate on the sphere: theta = 0.5 sin phi, r = pi/2 + 0.5 sin phi cos phi. It passes
// through (pi/2, 0) at phi = 0 and phi = pi, crossing itself there once. Samples sit at
// half-step offsets so no vertex lands on the crossing.
inline std::vector<PolylinePoint> figure_eight(int n) {
  constexpr double pi = std::numbers::pi;
  std::vector<PolylinePoint> pts;
  for (int i = 0; i <= n; ++i) {
    const double phi = 2.0 * pi * (i + 0.5) / n;
    pts.push_back({phi, embed(pi / 2 + 0.5 * std::sin(phi) * std::cos(phi), 0.5 * std::sin(phi))});
  }
  return pts;
}

}  // namespace fx
