#pragma once

// First-return map of the geodesic flow to the equator (a simple closed geodesic of every
// metric of revolution). A point of the annulus A is an upward crossing (r increasing)
// at equator position x with angle alpha in (0, pi) to the equator's direction.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zollgeo/errors.hpp"
#include "zollgeo/geodesics.hpp"
#include "zollgeo/intersections.hpp"
#include "zollgeo/metric.hpp"

namespace zollgeo {

struct AnnulusPoint {
  double x = 0.0;      // radians mod 2pi
  double alpha = 0.0;  // radians, in (0, pi)

  /// The annulus coordinate normalized to (0, 1).
  double alpha_norm() const { return alpha / pi; }

  GeodesicState as_state() const { return {half_pi, x, alpha, 0.0}; }
};

inline double annulus_distance(const AnnulusPoint& a, const AnnulusPoint& b) {
  return std::max(std::abs(wrap_signed(a.x - b.x)), std::abs(a.alpha - b.alpha));
}

struct ReturnMapOptions {
  double horizon = 16.0 * pi;
  double match_tol = 1e-5;
  /// alpha must lie in (tangency_margin, pi - tangency_margin)
  double tangency_margin = 1e-4;
  IntegratorOptions integrator{};
  SelfIntersectionOptions intersections{};
};

struct ReturnMapSample {
  AnnulusPoint v;
  AnnulusPoint Fv;
  double flight = 0.0;
  /// F(v), F^2(v), ... up to the return or the horizon
  std::vector<AnnulusPoint> orbit;
  std::optional<int> per;
  /// arc length of Per(v) returns, i.e. P(v)
  double period = 0.0;
  std::optional<int> crossings;
  std::optional<bool> simple;

  /// 2 Per(v) equals the number of equator crossings per period.
  bool relation_holds() const { return per && crossings && 2 * *per == *crossings; }
};

namespace detail {

inline void check_annulus_point(const AnnulusPoint& v, const ReturnMapOptions& opts) {
  if (!(v.alpha > opts.tangency_margin && v.alpha < pi - opts.tangency_margin))
    throw DomainError("return map: alpha inside the tangency exclusion zone");
}

inline void check_metric(const MetricOfRevolution& m) {
  const auto rep = validate(m);
  if (rep.has(Invariant::Positivity) || rep.has(Invariant::Range) || rep.has(Invariant::Oddness))
    throw PreconditionError("return map: metric fails validation");
}

inline AnnulusPoint first_return_point(const MetricOfRevolution& m, const AnnulusPoint& v,
                                       const ReturnMapOptions& opts, double& flight) {
  IntegratorOptions o = opts.integrator;
  o.record_steps = false;
  auto stop = [](const GeodesicEvent& e) {
    return e.type == EventType::EquatorCrossing && e.direction == Direction::Up && e.s > 0.0;
  };
  const auto traj = integrate(m, v.as_state(), opts.horizon, o, stop);
  if (!traj.stopped) throw NoReturnError("first_return: no upward equator crossing within horizon");
  const auto& e = traj.events.back();
  flight = e.s;
  return {wrap_positive(e.theta), wrap_positive(e.beta)};
}

}  // namespace detail

/// F(v) and the flight length to it.
inline ReturnMapSample first_return(const MetricOfRevolution& m, const AnnulusPoint& v,
                                    const ReturnMapOptions& opts = {}) {
  detail::check_annulus_point(v, opts);
  detail::check_metric(m);
  ReturnMapSample out;
  out.v = v;
  out.Fv = detail::first_return_point(m, v, opts, out.flight);
  out.orbit.push_back(out.Fv);
  return out;
}

/// Iterates F until it returns to v (Per) within the arc-length horizon, then integrates one
/// full period P(v) and counts every equator crossing and self-crossing in [0, P(v)).
inline ReturnMapSample per_and_crossings(const MetricOfRevolution& m, const AnnulusPoint& v,
                                         const ReturnMapOptions& opts = {}) {
  detail::check_annulus_point(v, opts);
  detail::check_metric(m);
  ReturnMapSample out;
  out.v = v;
  AnnulusPoint cur = v;
  double total = 0.0;
  while (true) {
    ReturnMapOptions o = opts;
    o.horizon = opts.horizon - total;
    if (o.horizon <= 0.0) break;
    double flight = 0.0;
    try {
      cur = detail::first_return_point(m, cur, o, flight);
    } catch (const NoReturnError&) {
      break;
    }
    total += flight;
    out.orbit.push_back(cur);
    if (out.orbit.size() == 1) {
      out.Fv = cur;
      out.flight = flight;
    }
    if (annulus_distance(cur, v) < opts.match_tol) {
      out.per = static_cast<int>(out.orbit.size());
      out.period = total;
      break;
    }
    // a tangency produced by the orbit itself ends the iteration
    if (!(cur.alpha > opts.tangency_margin && cur.alpha < pi - opts.tangency_margin)) break;
  }
  if (!out.per) return out;

  IntegratorOptions io = opts.integrator;
  io.record_steps = true;
  const auto traj = integrate(m, v.as_state(), out.period, io);
  int n = 0;
  for (const auto& e : traj.events)
    if (e.type == EventType::EquatorCrossing) ++n;
  out.crossings = n;
  out.simple = self_intersections(m, traj, 0.0, std::min(out.period, traj.s_end), opts.intersections).count == 0;
  return out;
}

struct BoundaryDiagnostic {
  double alpha;
  double displacement;  // |F(v) - v| in the annulus metric
  double flight;
};

struct ReturnMapReport {
  std::string label;
  std::size_t nx = 0, nalpha = 0;
  std::vector<ReturnMapSample> samples;
  std::optional<int> m0;
  std::set<int> spectrum;
  /// spectrum is a subset of {m0, 2 m0}
  bool spectrum_ok = true;
  /// max |F^{m0}(v) - v| over resolved samples
  double max_displacement = 0.0;
  /// max |F(v) - v| over all samples with a first return
  double max_first_return_displacement = 0.0;
  std::size_t resolved = 0;
  std::size_t unresolved = 0;
  std::size_t simple_count = 0;
  bool relation_holds_everywhere = true;
  bool injective = true;
  std::vector<BoundaryDiagnostic> boundary;

  /// Unresolved samples point at orbits that do not close: not a P-manifold.
  bool non_p_behavior() const { return unresolved > 0; }
};

inline std::vector<AnnulusPoint> annulus_grid(std::size_t nx, std::size_t nalpha) {
  std::vector<AnnulusPoint> g;
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < nalpha; ++j)
      g.push_back({two_pi * static_cast<double>(i) / static_cast<double>(nx),
                   pi * static_cast<double>(j + 1) / static_cast<double>(nalpha + 1)});
  return g;
}

inline ReturnMapReport build_report(const MetricOfRevolution& m, std::size_t nx, std::size_t nalpha,
                                    const ReturnMapOptions& opts = {}) {
  if (nx < 2 || nalpha < 2) throw DomainError("build_report: grid sizes must be at least 2");
  ReturnMapReport rep;
  rep.label = m.label();
  rep.nx = nx;
  rep.nalpha = nalpha;
  for (const auto& v : annulus_grid(nx, nalpha)) rep.samples.push_back(per_and_crossings(m, v, opts));

  for (const auto& s : rep.samples) {
    if (s.per) {
      ++rep.resolved;
      rep.spectrum.insert(*s.per);
      rep.m0 = rep.m0 ? std::min(*rep.m0, *s.per) : *s.per;
      rep.relation_holds_everywhere = rep.relation_holds_everywhere && s.relation_holds();
      if (s.simple && *s.simple) ++rep.simple_count;
    } else {
      ++rep.unresolved;
    }
    if (!s.orbit.empty())
      rep.max_first_return_displacement =
          std::max(rep.max_first_return_displacement, annulus_distance(s.Fv, s.v));
  }
  if (rep.m0) {
    for (const int p : rep.spectrum) rep.spectrum_ok = rep.spectrum_ok && (p == *rep.m0 || p == 2 * *rep.m0);
    for (const auto& s : rep.samples) {
      if (!s.per) continue;
      const auto idx = static_cast<std::size_t>(*rep.m0) - 1;
      if (idx < s.orbit.size())
        rep.max_displacement = std::max(rep.max_displacement, annulus_distance(s.orbit[idx], s.v));
    }
  }
  for (std::size_t a = 0; a < rep.samples.size(); ++a) {
    for (std::size_t b = a + 1; b < rep.samples.size(); ++b) {
      const auto& sa = rep.samples[a];
      const auto& sb = rep.samples[b];
      if (sa.orbit.empty() || sb.orbit.empty()) continue;
      if (annulus_distance(sa.Fv, sb.Fv) < 1e-6) rep.injective = false;
    }
  }
  for (const double a : {1e-1, 1e-2, 1e-3}) {
    for (const double alpha : {a, pi - a}) {
      const auto fr = first_return(m, {0.0, alpha}, opts);
      rep.boundary.push_back({alpha, annulus_distance(fr.Fv, fr.v), fr.flight});
    }
  }
  return rep;
}

}  // namespace zollgeo
