#pragma once

// The Darboux integral
//
//   I(t) = int_t^{pi-t} f(cos r) sin t / (sin r sqrt(sin^2 r - sin^2 t)) dr,
//
// the theta-advance of a geodesic with Clairaut constant sin t between consecutive
// turning points. All geodesics close iff I(t) = (p/q) pi for every t.
//
// With u = cos r = cos t sin psi the endpoint singularities disappear:
//   I(t) = sin t * int_{-pi/2}^{pi/2} f(cos t sin psi) / (1 - cos^2 t sin^2 psi) dpsi.
// A second substitution tan psi = tan phi / sin t absorbs the remaining kernel exactly:
//   I(t) = int_{-pi/2}^{pi/2} f(cos t sin psi(phi)) dphi,
//   sin psi(phi) = sin phi / sqrt(sin^2 t cos^2 phi + sin^2 phi).
// The integrand varies on the scale sin t around phi = 0, so the rule is applied on
// panels graded geometrically away from 0.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zollgeo/errors.hpp"
#include "zollgeo/geodesics.hpp"
#include "zollgeo/metric.hpp"
#include "zollgeo/quadrature.hpp"

namespace zollgeo {

struct DarbouxValue {
  double value = 0.0;
  /// |I_{2n} - I_n|
  double doubling_change = 0.0;
  bool converged = true;

  operator double() const { return value; }  // NOLINT(google-explicit-constructor)
};

namespace detail {

inline double darboux_panels(const MetricOfRevolution& m, double t, std::size_t n_nodes) {
  const double st = std::sin(t);
  const double a = std::cos(t);
  auto integrand = [&](double phi) {
    const double sp = std::sin(phi);
    const double cp = std::cos(phi);
    const double sin_psi = sp / std::sqrt(st * st * cp * cp + sp * sp);
    return m.f_unchecked(a * sin_psi);
  };
  // panel edges 0, sin t, 2 sin t, 4 sin t, ... clipped at pi/2
  double sum = 0.0;
  double lo = 0.0;
  while (half_pi - lo > 1e-15) {
    const double hi = std::min(half_pi, lo == 0.0 ? st : 2.0 * lo);
    // mirrored nodes keep the odd part cancelling node by node
    sum += integrate_gauss_legendre(
        [&](double x) { return integrand(x) + integrand(-x); }, lo, hi, n_nodes);
    lo = hi;
  }
  return sum;
}

}  // namespace detail

/// I(t) with n_nodes Gauss-Legendre nodes per panel; `doubling_change` compares against
/// 2 n_nodes and `converged` is false when it exceeds 1e-10.
inline DarbouxValue darboux_integral(const MetricOfRevolution& m, double t,
                                     std::size_t n_nodes = 16) {
  if (!(t > 0.0 && t < half_pi)) throw DomainError("darboux_integral: t must lie in (0, pi/2)");
  if (n_nodes < 8) throw DomainError("darboux_integral: need at least 8 nodes");
  DarbouxValue v;
  v.value = detail::darboux_panels(m, t, n_nodes);
  const double refined = detail::darboux_panels(m, t, 2 * n_nodes);
  v.doubling_change = std::abs(refined - v.value);
  v.converged = v.doubling_change <= 1e-10;
  return v;
}

// ---------------------------------------------------------------------------
// Rotation numbers

struct Rational {
  std::int64_t p = 0;
  std::int64_t q = 1;

  double value() const { return static_cast<double>(p) / static_cast<double>(q); }
  std::string str() const { return std::to_string(p) + "/" + std::to_string(q); }
  bool operator==(const Rational&) const = default;
};

/// First continued-fraction convergent p/q of x with q <= q_max and |x - p/q| < tol.
inline std::optional<Rational> rational_approx(double x, std::int64_t q_max, double tol = 1e-6) {
  if (!(x > 0.0)) throw DomainError("rational_approx: x must be positive");
  if (q_max < 1) throw DomainError("rational_approx: q_max must be at least 1");
  // convergents h_n / k_n
  std::int64_t h_prev = 1, h = static_cast<std::int64_t>(std::floor(x));
  std::int64_t k_prev = 0, k = 1;
  double rem = x - std::floor(x);
  for (int it = 0; it < 64; ++it) {
    if (k > q_max) break;
    if (std::abs(x - static_cast<double>(h) / static_cast<double>(k)) < tol) return Rational{h, k};
    if (rem < 1e-15) break;
    const double inv = 1.0 / rem;
    const auto a = static_cast<std::int64_t>(std::floor(inv));
    rem = inv - std::floor(inv);
    const std::int64_t h_next = a * h + h_prev;
    const std::int64_t k_next = a * k + k_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Scans

enum class DarbouxVerdict {
  /// constant with rotation number 1: the Zoll condition
  ZollCompatible,
  /// constant, rational p/q != 1
  ConstantRational,
  /// constant, no small-denominator rotation number found
  ConstantUndetermined,
  NonConstant,
};

inline const char* to_string(DarbouxVerdict v) {
  switch (v) {
    case DarbouxVerdict::ZollCompatible: return "zoll-compatible";
    case DarbouxVerdict::ConstantRational: return "constant-rational";
    case DarbouxVerdict::ConstantUndetermined: return "constant-undetermined";
    case DarbouxVerdict::NonConstant: return "non-constant";
  }
  return "?";
}

struct DarbouxPoint {
  double t;
  double value;
};

struct DarbouxScan {
  std::string label;
  std::vector<DarbouxPoint> grid;
  double mean = 0.0;
  double max_deviation = 0.0;
  std::optional<Rational> rotation_number;
  DarbouxVerdict verdict = DarbouxVerdict::NonConstant;
  bool all_converged = true;
};

struct ScanOptions {
  std::size_t n_nodes = 16;
  double constancy_tol = 1e-8;
  std::int64_t q_max = 100;
  double rational_tol = 1e-6;
};

/// n uniformly spaced turning colatitudes in [margin, pi/2 - margin].
inline std::vector<double> default_t_grid(std::size_t n = 50, double margin = 0.01) {
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i)
    g[i] = margin + (half_pi - 2.0 * margin) * static_cast<double>(i) / static_cast<double>(n - 1);
  return g;
}

inline DarbouxScan scan(const MetricOfRevolution& m, const std::vector<double>& t_grid,
                        const ScanOptions& opts = {}) {
  if (t_grid.size() < 2) throw DomainError("scan: need at least 2 grid points");
  DarbouxScan out;
  out.label = m.label();
  double sum = 0.0;
  for (const double t : t_grid) {
    const auto v = darboux_integral(m, t, opts.n_nodes);
    out.all_converged = out.all_converged && v.converged;
    out.grid.push_back({t, v.value});
    sum += v.value;
  }
  out.mean = sum / static_cast<double>(t_grid.size());
  for (const auto& pt : out.grid) out.max_deviation = std::max(out.max_deviation, std::abs(pt.value - out.mean));
  if (out.max_deviation >= opts.constancy_tol) {
    out.verdict = DarbouxVerdict::NonConstant;
    return out;
  }
  out.rotation_number = rational_approx(out.mean / pi, opts.q_max, opts.rational_tol);
  if (!out.rotation_number)
    out.verdict = DarbouxVerdict::ConstantUndetermined;
  else if (out.rotation_number->p == out.rotation_number->q)
    out.verdict = DarbouxVerdict::ZollCompatible;
  else
    out.verdict = DarbouxVerdict::ConstantRational;
  return out;
}

// ---------------------------------------------------------------------------
// Cross-check against the geodesic flow

struct DarbouxDynamicsReport {
  double t = 0.0;
  double integral = 0.0;
  /// theta advance between the first two turning points of the integrated geodesic
  double measured = 0.0;
  double difference = 0.0;
};

/// Launches the geodesic from the equator with Clairaut constant sin t and compares its
/// half-oscillation theta-advance with I(t).
inline DarbouxDynamicsReport darboux_vs_dynamics(const MetricOfRevolution& m, double t,
                                                 const IntegratorOptions& opts = {},
                                                 std::size_t n_nodes = 16) {
  if (!(t > 1e-3 && t < half_pi - 1e-3))
    throw DomainError("darboux_vs_dynamics: t must lie inside (0, pi/2) away from the ends");
  DarbouxDynamicsReport rep;
  rep.t = t;
  rep.integral = darboux_integral(m, t, n_nodes).value;
  const GeodesicState start{half_pi, 0.0, half_pi - t, 0.0};
  std::size_t turns = 0;
  auto stop = [&turns](const GeodesicEvent& e) {
    return e.type == EventType::TurningPoint && ++turns == 2;
  };
  IntegratorOptions o = opts;
  o.record_steps = false;
  const auto traj = integrate(m, start, 16.0 * pi, o, stop);
  const auto tp = traj.of_type(EventType::TurningPoint);
  if (tp.size() < 2) throw NoReturnError("darboux_vs_dynamics: fewer than two turning points");
  rep.measured = tp[1].theta - tp[0].theta;
  rep.difference = std::abs(rep.integral - rep.measured);
  return rep;
}

}  // namespace zollgeo
