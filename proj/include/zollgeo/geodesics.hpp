#pragma once

// Unit-speed geodesics of a metric of revolution in the chart (r, theta, beta),
// beta being the heading measured from d/dtheta in the orthonormal frame:
//
//   dr/ds     = sin(beta) / F(r)
//   dtheta/ds = cos(beta) / sin(r)
//   dbeta/ds  = cos(beta) cos(r) / (F(r) sin(r))        F(r) = f(cos r)
//
// The last equation is d/ds (sin r cos beta) = 0 (Clairaut) solved for beta.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <boost/math/tools/minima.hpp>
#include <boost/numeric/odeint.hpp>

#include "zollgeo/errors.hpp"
#include "zollgeo/metric.hpp"
#include "zollgeo/quadrature.hpp"

namespace zollgeo {

struct GeodesicState {
  double r = half_pi;
  double theta = 0.0;
  double beta = 0.0;
  double s = 0.0;

  /// c = sin r cos beta = sin^2 r dtheta/ds
  double clairaut() const { return std::sin(r) * std::cos(beta); }
};

/// Image under the antipodal map (r, theta) -> (pi - r, theta + pi); headings flip sign.
inline GeodesicState antipode(const GeodesicState& st) {
  return {pi - st.r, st.theta + pi, -st.beta, st.s};
}

/// max(|dr|, |dtheta| mod 2pi, |dbeta| mod 2pi)
inline double phase_distance(const GeodesicState& a, const GeodesicState& b) {
  return std::max({std::abs(a.r - b.r), std::abs(wrap_signed(a.theta - b.theta)),
                   std::abs(wrap_signed(a.beta - b.beta))});
}

struct IntegratorOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  double max_step = pi / 50.0;
  double min_step = 1e-13;
  double pole_margin = 1e-6;
  double meridian_threshold = 1e-4;
  /// event refinement target on the event function
  double event_tol = 1e-10;
  /// events closer than this to s_max are treated as lying outside [0, s_max)
  double endpoint_guard = 1e-8;
  bool record_steps = true;
};

enum class EventType { EquatorCrossing, TurningPoint };

/// Up means r increasing through the equator (sin beta > 0).
enum class Direction { None, Up, Down };

inline const char* to_string(EventType t) {
  return t == EventType::EquatorCrossing ? "equator" : "turning";
}
inline const char* to_string(Direction d) {
  switch (d) {
    case Direction::Up: return "up";
    case Direction::Down: return "down";
    default: return "none";
  }
}

struct GeodesicEvent {
  double s;
  EventType type;
  double r;
  double theta;  // unwrapped
  double beta;
  Direction direction = Direction::None;
};

/// theta is kept unwrapped along a trajectory.
struct StepRecord {
  double s;
  double r;
  double theta;
  double beta;
};

struct TrajectoryDiagnostics {
  double max_energy_drift = 0.0;
  double max_clairaut_drift = 0.0;
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;
};

namespace detail {

using OdeState = std::array<double, 3>;

struct GeodesicSystem {
  const MetricOfRevolution* metric;

  void operator()(const OdeState& y, OdeState& dy, double /*s*/) const {
    const double F = metric->f_of_r(y[0]);
    const double sr = std::sin(y[0]);
    const double cb = std::cos(y[2]);
    dy[0] = std::sin(y[2]) / F;
    dy[1] = cb / sr;
    dy[2] = cb * std::cos(y[0]) / (F * sr);
  }
};

inline OdeState to_ode(const GeodesicState& st) { return {st.r, st.theta, st.beta}; }
inline GeodesicState from_ode(const OdeState& y, double s) { return {y[0], y[1], y[2], s}; }

/// One explicit Dormand-Prince step of size ds; used for dense evaluation inside an
/// accepted step, where it is at least as accurate as the step itself.
inline OdeState single_step(const MetricOfRevolution& m, const OdeState& y, double s, double ds) {
  if (ds == 0.0) return y;
  boost::numeric::odeint::runge_kutta_dopri5<OdeState> stepper;
  OdeState out;
  stepper.do_step(GeodesicSystem{&m}, y, s, out, ds);
  return out;
}

inline double energy_defect(const MetricOfRevolution& m, const OdeState& y) {
  OdeState dy;
  GeodesicSystem{&m}(y, dy, 0.0);
  const double F = m.f_of_r(y[0]);
  const double sr = std::sin(y[0]);
  return std::abs(F * F * dy[0] * dy[0] + sr * sr * dy[1] * dy[1] - 1.0);
}

}  // namespace detail

/// Velocity of the (r, theta, beta) flow at a state.
inline std::array<double, 3> phase_velocity(const MetricOfRevolution& m, const GeodesicState& st) {
  detail::OdeState dy;
  detail::GeodesicSystem{&m}(detail::to_ode(st), dy, 0.0);
  return dy;
}

// ---------------------------------------------------------------------------
// Meridians

/// Geodesic through both poles. Parametrized by the angle phi along the great circle of
/// the coordinate sphere: phi mod 2pi in [0, pi] is (r = phi, theta_anchor), in (pi, 2pi)
/// it is (r = 2pi - phi, theta_anchor + pi). Arc length is the integral of F(phi).
class MeridianPath {
public:
  MeridianPath(const MetricOfRevolution& m, double phi0, double theta_anchor,
               std::size_t quad_nodes = 64)
      : metric_(m), phi0_(phi0), theta_anchor_(theta_anchor), nodes_(quad_nodes) {
    half_period_ = primitive(pi);
    min_f_ = max_f_ = metric_.f_of_r(0.0);
    for (int i = 1; i <= 512; ++i) {
      const double v = metric_.f_of_r(pi * i / 512.0);
      min_f_ = std::min(min_f_, v);
      max_f_ = std::max(max_f_, v);
    }
    s_offset_ = cumulative(phi0_);
  }

  /// Arc length of the closed meridian, 2 * int_0^pi f(cos r) dr.
  double full_period() const { return 2.0 * half_period_; }
  double phi0() const { return phi0_; }
  double theta_anchor() const { return theta_anchor_; }

  /// Arc length from phi = 0 to phi.
  double cumulative(double phi) const {
    const double k = std::floor(phi / pi);
    const double rem = phi - k * pi;
    const bool even = std::fmod(std::abs(k), 2.0) == 0.0;
    const double part = even ? primitive(rem) : half_period_ - primitive(pi - rem);
    return k * half_period_ + part;
  }

  /// phi reached after arc length s from the start.
  double phi_at(double s) const {
    const double target = s_offset_ + s;
    double lo = phi0_ + s / max_f_, hi = phi0_ + s / min_f_;
    double phi = phi0_ + s * two_pi / full_period();
    for (int it = 0; it < 100; ++it) {
      const double g = cumulative(phi) - target;
      if (std::abs(g) < 1e-14 * std::max(1.0, std::abs(target))) break;
      if (g > 0.0) hi = phi; else lo = phi;
      double next = phi - g / metric_.f_of_r(position(phi).first);
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      if (std::abs(next - phi) < 1e-15) { phi = next; break; }
      phi = next;
    }
    return phi;
  }

  GeodesicState state_at(double s) const {
    const double phi = phi_at(s);
    const auto [r, first_half] = position(phi);
    const double passages = std::floor(phi / pi);
    GeodesicState st;
    st.r = r;
    st.theta = theta_anchor_ + pi * passages;
    st.beta = first_half ? half_pi : -half_pi;
    st.s = s;
    return st;
  }

  /// Arc length (from the start) at which phi reaches the given value.
  double s_of_phi(double phi) const { return cumulative(phi) - s_offset_; }

private:
  // (r, whether r increases with phi) for a path angle
  std::pair<double, bool> position(double phi) const {
    const double pm = wrap_positive(phi);
    if (pm <= pi) return {pm, true};
    return {two_pi - pm, false};
  }

  // int_0^x F for x in [0, pi]
  double primitive(double x) const {
    if (x <= 0.0) return 0.0;
    return integrate_gauss_legendre([this](double r) { return metric_.f_of_r(r); }, 0.0, x,
                                    nodes_);
  }

  MetricOfRevolution metric_;
  double phi0_;
  double theta_anchor_;
  std::size_t nodes_;
  double half_period_ = 0.0;
  double min_f_ = 1.0, max_f_ = 1.0;
  double s_offset_ = 0.0;
};

// ---------------------------------------------------------------------------
// Trajectories

struct Trajectory {
  std::string label;
  GeodesicState initial;
  /// requested length
  double s_max = 0.0;
  /// last integrated arc length (>= s_max unless stopped early)
  double s_end = 0.0;
  bool stopped = false;
  std::vector<StepRecord> steps;
  std::vector<GeodesicEvent> events;
  TrajectoryDiagnostics diagnostics;
  std::optional<MeridianPath> meridian;

  std::size_t count(EventType type) const {
    return static_cast<std::size_t>(std::count_if(
        events.begin(), events.end(), [type](const GeodesicEvent& e) { return e.type == type; }));
  }

  std::vector<GeodesicEvent> of_type(EventType type) const {
    std::vector<GeodesicEvent> out;
    for (const auto& e : events)
      if (e.type == type) out.push_back(e);
    return out;
  }
};

using EventCallback = std::function<bool(const GeodesicEvent&)>;

namespace detail {

/// Logs an event unless it duplicates the previous event of the same type or falls
/// into the endpoint guard. Returns whether the stop callback asked to terminate.
inline bool push_event(Trajectory& traj, const GeodesicEvent& ev, const IntegratorOptions& opts,
                       const EventCallback& stop) {
  if (ev.s > traj.s_max - opts.endpoint_guard) return false;
  for (auto it = traj.events.rbegin(); it != traj.events.rend(); ++it) {
    if (it->type != ev.type) continue;
    if (std::abs(it->s - ev.s) < 1e-9) return false;
    break;
  }
  traj.events.push_back(ev);
  return stop && stop(ev);
}

inline GeodesicEvent make_event(double s, EventType type, const OdeState& y) {
  GeodesicEvent ev{s, type, y[0], y[1], y[2], Direction::None};
  if (type == EventType::EquatorCrossing) ev.direction = std::sin(y[2]) > 0.0 ? Direction::Up : Direction::Down;
  return ev;
}

/// Bisection on an event function g over a step [s0, s0 + ds] with g(s0) g(s0 + ds) < 0.
template <class G>
std::pair<double, OdeState> refine_event(const MetricOfRevolution& m, const OdeState& y0, double s0,
                                         double ds, double g0, G&& g, double tol) {
  double lo = 0.0, hi = ds;
  double glo = g0;
  OdeState ymid = y0;
  double mid = 0.0;
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    ymid = single_step(m, y0, s0, mid);
    const double gm = g(ymid);
    if (gm == 0.0 || (std::abs(gm) < tol && hi - lo < 1e-12)) break;
    if ((gm < 0.0) == (glo < 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-15) break;
  }
  return {s0 + mid, ymid};
}

inline Trajectory meridian_from(const MetricOfRevolution& m, const GeodesicState& initial,
                                double s_max, const IntegratorOptions& opts,
                                const EventCallback& stop) {
  // r increasing with phi on the anchor meridian; otherwise start on the far side
  const bool increasing = std::sin(initial.beta) >= 0.0;
  const double phi0 = increasing ? initial.r : two_pi - initial.r;
  const double anchor = increasing ? initial.theta : initial.theta - pi;
  Trajectory traj;
  traj.label = m.label();
  traj.s_max = s_max;
  traj.meridian.emplace(m, phi0, anchor);
  const MeridianPath& path = *traj.meridian;
  traj.initial = path.state_at(0.0);

  // events sit at fixed phi: equator at pi/2 + k pi, poles (turning) at k pi
  std::vector<GeodesicEvent> evs;
  const double phi_end = path.phi_at(s_max);
  for (double k = std::floor(phi0 / (0.5 * pi)); k * 0.5 * pi <= phi_end; k += 1.0) {
    const double phi = k * 0.5 * pi;
    if (phi < phi0 - 1e-15) continue;
    const double s = phi <= phi0 ? 0.0 : path.s_of_phi(phi);
    const auto st = path.state_at(s);
    const bool pole = std::fmod(k, 2.0) == 0.0;
    GeodesicEvent ev = make_event(s, pole ? EventType::TurningPoint : EventType::EquatorCrossing,
                                  {pole ? std::round(st.r / pi) * pi : half_pi, st.theta, st.beta});
    evs.push_back(ev);
  }
  for (const auto& ev : evs) {
    if (push_event(traj, ev, opts, stop)) {
      traj.stopped = true;
      traj.s_end = ev.s;
      break;
    }
  }
  if (!traj.stopped) traj.s_end = s_max;
  if (opts.record_steps) {
    const auto n = static_cast<std::size_t>(std::ceil(traj.s_end / opts.max_step));
    for (std::size_t i = 0; i <= n; ++i) {
      const double s = traj.s_end * static_cast<double>(i) / static_cast<double>(std::max<std::size_t>(n, 1));
      auto st = path.state_at(s);
      traj.steps.push_back({s, st.r, st.theta, st.beta});
    }
  }
  return traj;
}

}  // namespace detail

/// Analytic meridian starting on the equator, heading south along theta0.
inline Trajectory meridian_trajectory(const MetricOfRevolution& m, double theta0, double s_max,
                                      const IntegratorOptions& opts = {}) {
  if (!(s_max > 0.0)) throw DomainError("meridian_trajectory: s_max must be positive");
  return detail::meridian_from(m, {half_pi, theta0, half_pi, 0.0}, s_max, opts, {});
}

/// Integrates the geodesic from `initial` over [0, s_max], logging equator crossings and
/// turning points. Orbits with |c| below the meridian threshold follow the analytic meridian.
/// `stop`, if given, is consulted after each logged event and may end the integration.
inline Trajectory integrate(const MetricOfRevolution& m, const GeodesicState& initial,
                            double s_max, const IntegratorOptions& opts = {},
                            const EventCallback& stop = {}) {
  using namespace boost::numeric::odeint;
  if (!(s_max > 0.0)) throw DomainError("integrate: s_max must be positive");
  const double c0 = initial.clairaut();
  if (std::abs(c0) < opts.meridian_threshold) return detail::meridian_from(m, initial, s_max, opts, stop);
  if (initial.r < opts.pole_margin || initial.r > pi - opts.pole_margin)
    throw PoleProximityError("integrate: initial point within pole margin");

  Trajectory traj;
  traj.label = m.label();
  traj.initial = initial;
  traj.initial.s = 0.0;
  traj.s_max = s_max;

  detail::OdeState y = detail::to_ode(initial);
  double s = 0.0;
  if (opts.record_steps) traj.steps.push_back({0.0, y[0], y[1], y[2]});

  auto g_equator = [](const detail::OdeState& v) { return v[0] - half_pi; };
  auto g_turning = [](const detail::OdeState& v) { return std::sin(v[2]); };

  // events at s = 0
  const bool on_equator = std::abs(g_equator(y)) < opts.event_tol;
  const bool tangent = std::abs(g_turning(y)) < opts.event_tol;
  if (on_equator && !tangent) {
    if (detail::push_event(traj, detail::make_event(0.0, EventType::EquatorCrossing, y), opts, stop)) {
      traj.stopped = true;
      traj.s_end = 0.0;
      return traj;
    }
  } else if (tangent && !on_equator) {
    if (detail::push_event(traj, detail::make_event(0.0, EventType::TurningPoint, y), opts, stop)) {
      traj.stopped = true;
      traj.s_end = 0.0;
      return traj;
    }
  }

  auto stepper = make_controlled(opts.abs_tol, opts.rel_tol, runge_kutta_dopri5<detail::OdeState>());
  const detail::GeodesicSystem sys{&m};
  double ds = std::min(opts.max_step, s_max);
  while (s < s_max) {
    ds = std::min({ds, opts.max_step, s_max - s});
    if (ds < opts.min_step && s_max - s > opts.min_step)
      throw StepFailure("integrate: step size underflow at s = " + std::to_string(s));
    const detail::OdeState y0 = y;
    const double s0 = s;
    if (stepper.try_step(sys, y, s, ds) != success) {
      ++traj.diagnostics.rejected_steps;
      continue;
    }
    ++traj.diagnostics.accepted_steps;
    if (y[0] < opts.pole_margin || y[0] > pi - opts.pole_margin)
      throw PoleProximityError("integrate: trajectory entered pole margin; use the meridian path");

    const double step = s - s0;
    std::vector<GeodesicEvent> found;
    const double ge0 = g_equator(y0), ge1 = g_equator(y);
    if (ge0 * ge1 < 0.0) {
      auto [se, ye] = detail::refine_event(m, y0, s0, step, ge0, g_equator, opts.event_tol);
      found.push_back(detail::make_event(se, EventType::EquatorCrossing, ye));
    }
    const double gt0 = g_turning(y0), gt1 = g_turning(y);
    if (gt0 * gt1 < 0.0) {
      auto [st, yt] = detail::refine_event(m, y0, s0, step, gt0, g_turning, opts.event_tol);
      found.push_back(detail::make_event(st, EventType::TurningPoint, yt));
    }
    std::sort(found.begin(), found.end(),
              [](const GeodesicEvent& a, const GeodesicEvent& b) { return a.s < b.s; });

    traj.diagnostics.max_clairaut_drift =
        std::max(traj.diagnostics.max_clairaut_drift, std::abs(std::sin(y[0]) * std::cos(y[2]) - c0));
    traj.diagnostics.max_energy_drift =
        std::max(traj.diagnostics.max_energy_drift, detail::energy_defect(m, y));
    if (opts.record_steps) traj.steps.push_back({s, y[0], y[1], y[2]});

    for (const auto& ev : found) {
      if (detail::push_event(traj, ev, opts, stop)) {
        traj.stopped = true;
        traj.s_end = s;
        return traj;
      }
    }
  }
  traj.s_end = s;
  return traj;
}

/// Advances a state by arc length ds.
inline GeodesicState step_geodesic(const MetricOfRevolution& m, const GeodesicState& state,
                                   double ds, const IntegratorOptions& opts = {}) {
  if (state.r < opts.pole_margin || state.r > pi - opts.pole_margin)
    throw PoleProximityError("step_geodesic: state within pole margin");
  if (!(ds > 0.0)) throw DomainError("step_geodesic: ds must be positive");
  IntegratorOptions o = opts;
  o.record_steps = true;
  o.meridian_threshold = 0.0;
  const auto traj = integrate(m, state, ds, o);
  const auto& last = traj.steps.back();
  return {last.r, last.theta, last.beta, state.s + ds};
}

/// State on a trajectory at arc length s (dense evaluation from the nearest record).
inline GeodesicState state_at(const MetricOfRevolution& m, const Trajectory& traj, double s) {
  if (traj.meridian) return traj.meridian->state_at(s);
  if (traj.steps.empty()) throw DomainError("state_at: trajectory has no step records");
  if (s < 0.0 || s > traj.steps.back().s + 1e-12)
    throw DomainError("state_at: s outside the integrated range");
  auto it = std::upper_bound(traj.steps.begin(), traj.steps.end(), s,
                             [](double v, const StepRecord& rec) { return v < rec.s; });
  if (it != traj.steps.begin()) --it;
  const detail::OdeState y0{it->r, it->theta, it->beta};
  const auto y = detail::single_step(m, y0, it->s, s - it->s);
  return detail::from_ode(y, s);
}

// ---------------------------------------------------------------------------
// Periods

struct PeriodEstimate {
  bool closed = false;
  double period = 0.0;
  /// phase distance at s = period (or the best near-return seen when not closed)
  double return_error = 0.0;
};

/// Least s in (0, s_end] at which the trajectory passes through `target` (phase distance
/// below match_tol). Candidates are crossings of the hyperplane through `target` normal to
/// the flow, refined by bisection and then by local minimization of the phase distance.
inline PeriodEstimate find_return(const MetricOfRevolution& m, const Trajectory& traj,
                                  const GeodesicState& target, double match_tol) {
  PeriodEstimate est;
  est.return_error = std::numeric_limits<double>::infinity();
  const auto v = phase_velocity(m, target);
  auto section = [&](const GeodesicState& st) {
    return (st.r - target.r) * v[0] + wrap_signed(st.theta - target.theta) * v[1] +
           wrap_signed(st.beta - target.beta) * v[2];
  };
  auto at = [&](double s) { return state_at(m, traj, s); };

  std::vector<double> grid;
  for (const auto& rec : traj.steps)
    if (rec.s <= traj.s_end) grid.push_back(rec.s);
  if (grid.size() < 2) return est;

  double s_prev = grid[0];
  GeodesicState prev = at(s_prev);
  double g_prev = section(prev);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double s_cur = grid[i];
    const GeodesicState cur = at(s_cur);
    const double g_cur = section(cur);
    if (g_prev < 0.0 && g_cur >= 0.0 && phase_distance(prev, target) < 0.5 &&
        phase_distance(cur, target) < 0.5) {
      double lo = s_prev, hi = s_cur;
      for (int it = 0; it < 100 && hi - lo > 1e-14; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (section(at(mid)) < 0.0) lo = mid; else hi = mid;
      }
      const double root = 0.5 * (lo + hi);
      const double w = std::min(1e-3, 0.5 * (s_cur - s_prev));
      const double a = std::max(root - w, 1e-12);
      const double b = std::min(root + w, traj.s_end);
      auto dist = [&](double s) { return phase_distance(at(s), target); };
      std::uintmax_t max_iter = 200;
      auto [s_best, d_best] = boost::math::tools::brent_find_minima(dist, a, b, 40, max_iter);
      if (dist(root) <= d_best) {
        s_best = root;
        d_best = dist(root);
      }
      if (d_best < est.return_error) est.return_error = d_best;
      if (d_best < match_tol) {
        est.closed = true;
        est.period = s_best;
        est.return_error = d_best;
        return est;
      }
    }
    s_prev = s_cur;
    prev = cur;
    g_prev = g_cur;
  }
  return est;
}

/// Least period P(v) of the geodesic through `initial`, searched up to `horizon`.
inline PeriodEstimate find_period(const MetricOfRevolution& m, const GeodesicState& initial,
                                  double horizon = 8.0 * pi, double match_tol = 1e-5,
                                  const IntegratorOptions& opts = {}) {
  IntegratorOptions o = opts;
  o.record_steps = true;
  const auto traj = integrate(m, initial, horizon, o);
  return find_return(m, traj, traj.initial, match_tol);
}

// ---------------------------------------------------------------------------
// Round RP^2

struct QuotientResult {
  double period = 0.0;
  std::size_t crossings = 0;
  double return_error = 0.0;
};

/// Geodesic of the round metric viewed on RP^2 = S^2 / antipodal map: its period is the
/// first return to the antipodal image of the initial vector, and the equator's image is
/// a one-sided closed geodesic.
inline QuotientResult quotient_crossings_round_rp2(const MetricOfRevolution& m,
                                                   const GeodesicState& initial,
                                                   const IntegratorOptions& opts = {},
                                                   double match_tol = 1e-5) {
  if (!(m.h().is_zero() && m.e().is_zero()))
    throw FamilyError("quotient_crossings_round_rp2: only the round metric descends as a P-metric");
  if (std::abs(initial.r - half_pi) < opts.event_tol && std::abs(std::sin(initial.beta)) < opts.event_tol)
    throw PreconditionError("quotient_crossings_round_rp2: initial vector tangent to the equator image");
  IntegratorOptions o = opts;
  o.record_steps = true;
  const auto traj = integrate(m, initial, 2.0 * pi + 0.5, o);
  const auto est = find_return(m, traj, antipode(traj.initial), match_tol);
  if (!est.closed) throw NoReturnError("quotient_crossings_round_rp2: no antipodal return found");
  QuotientResult res;
  res.period = est.period;
  res.return_error = est.return_error;
  for (const auto& e : traj.events)
    if (e.type == EventType::EquatorCrossing && e.s < est.period - o.endpoint_guard) ++res.crossings;
  return res;
}

// ---------------------------------------------------------------------------
// Seeded initial conditions

/// Uniform double in [0, 1) from the top 53 bits; stable across standard libraries.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::vector<GeodesicState> sample_initial_states(std::size_t n, std::uint64_t seed,
                                                        double r_lo = 0.2, double r_hi = pi - 0.2) {
  std::mt19937_64 rng(seed);
  std::vector<GeodesicState> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    GeodesicState st;
    st.r = r_lo + (r_hi - r_lo) * unit_uniform(rng);
    st.theta = two_pi * unit_uniform(rng);
    st.beta = two_pi * unit_uniform(rng);
    out.push_back(st);
  }
  return out;
}

}  // namespace zollgeo
