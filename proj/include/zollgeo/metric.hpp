#pragma once

// Metrics of revolution on the coordinate sphere,
//
//   g = f(cos r)^2 dr^2 + sin^2 r dtheta^2,     f(u) = 1 + h(u) + e(u),
//
// with h odd (the Zoll family when e == 0) and e an even perturbation.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "zollgeo/errors.hpp"

namespace zollgeo {

/// h(u) = sum_i coeffs[i] * u^(2i+1).
struct OddPolynomial {
  std::vector<double> coeffs;
};

/// h(cos r) = cos r * sin((2k+1) r).
struct TrigExample {
  unsigned k = 0;
};

/// h(cos r) = cos r * sin^2 r / 2, i.e. h(u) = u (1 - u^2) / 2.
struct HalfSineExample {};

struct ZeroH {};

class HFunction {
public:
  using Variant = std::variant<ZeroH, OddPolynomial, TrigExample, HalfSineExample>;

  HFunction() = default;
  HFunction(Variant v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

  static HFunction zero() { return HFunction(ZeroH{}); }
  static HFunction odd_polynomial(std::vector<double> coeffs) {
    return HFunction(OddPolynomial{std::move(coeffs)});
  }
  static HFunction trig_example(unsigned k) { return HFunction(TrigExample{k}); }
  static HFunction half_sine() { return HFunction(HalfSineExample{}); }

  const Variant& variant() const { return v_; }

  bool is_zero() const {
    if (std::holds_alternative<ZeroH>(v_)) return true;
    if (const auto* p = std::get_if<OddPolynomial>(&v_))
      return std::all_of(p->coeffs.begin(), p->coeffs.end(), [](double c) { return c == 0.0; });
    return false;
  }

  /// h(u). Odd by construction: negative arguments are mapped through h(-u) = -h(u).
  double operator()(double u) const {
    if (u < 0.0) return -positive_branch(-u);
    return positive_branch(u);
  }

  /// h(cos r) for r in [0, pi]. TrigExample is evaluated in its r-form, which stays
  /// well conditioned near the poles.
  double of_r(double r) const {
    if (const auto* t = std::get_if<TrigExample>(&v_)) {
      const double n = 2.0 * t->k + 1.0;
      if (r > 0.5 * std::numbers::pi) {
        const double q = std::numbers::pi - r;
        return -std::cos(q) * std::sin(n * q);
      }
      return std::cos(r) * std::sin(n * r);
    }
    return (*this)(std::cos(r));
  }

  /// d/dr [h(cos r)], evaluated through the r-parametrization.
  double dr(double r) const {
    const double u = std::cos(r);
    const double s = std::sin(r);
    return std::visit(
        [&](const auto& h) -> double {
          using T = std::decay_t<decltype(h)>;
          if constexpr (std::is_same_v<T, ZeroH>) {
            return 0.0;
          } else if constexpr (std::is_same_v<T, OddPolynomial>) {
            return -s * polynomial_du(h, u);
          } else if constexpr (std::is_same_v<T, TrigExample>) {
            const double n = 2.0 * h.k + 1.0;
            return -s * std::sin(n * r) + n * u * std::cos(n * r);
          } else {
            return -s * 0.5 * (1.0 - 3.0 * u * u);
          }
        },
        v_);
  }

  std::string describe() const {
    return std::visit(
        [](const auto& h) -> std::string {
          using T = std::decay_t<decltype(h)>;
          if constexpr (std::is_same_v<T, ZeroH>) {
            return "zero";
          } else if constexpr (std::is_same_v<T, OddPolynomial>) {
            std::string out = "odd_poly[";
            for (std::size_t i = 0; i < h.coeffs.size(); ++i) {
              if (i) out += ",";
              out += std::to_string(h.coeffs[i]);
            }
            return out + "]";
          } else if constexpr (std::is_same_v<T, TrigExample>) {
            return "trig_example(k=" + std::to_string(h.k) + ")";
          } else {
            return "half_sine";
          }
        },
        v_);
  }

private:
  static double polynomial_du(const OddPolynomial& p, double u) {
    // sum (2i+1) c_i u^(2i)
    double acc = 0.0;
    const double u2 = u * u;
    for (std::size_t i = p.coeffs.size(); i-- > 0;)
      acc = acc * u2 + (2.0 * static_cast<double>(i) + 1.0) * p.coeffs[i];
    return acc;
  }

  double positive_branch(double u) const {
    return std::visit(
        [u](const auto& h) -> double {
          using T = std::decay_t<decltype(h)>;
          if constexpr (std::is_same_v<T, ZeroH>) {
            return 0.0;
          } else if constexpr (std::is_same_v<T, OddPolynomial>) {
            double acc = 0.0;
            const double u2 = u * u;
            for (std::size_t i = h.coeffs.size(); i-- > 0;) acc = acc * u2 + h.coeffs[i];
            return acc * u;
          } else if constexpr (std::is_same_v<T, TrigExample>) {
            // r-form; acos(1) == 0 makes h(1) == 0 exactly.
            const double r = std::acos(std::min(u, 1.0));
            return u * std::sin((2.0 * h.k + 1.0) * r);
          } else {
            return 0.5 * u * (1.0 - u * u);
          }
        },
        v_);
  }

  Variant v_{ZeroH{}};
};

/// e(u) = sum_i coeffs[i] * u^(2i+2); the constant term is fixed at zero.
class EvenPerturbation {
public:
  EvenPerturbation() = default;
  explicit EvenPerturbation(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {}

  const std::vector<double>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](double c) { return c == 0.0; });
  }

  double operator()(double u) const {
    const double u2 = u * u;
    double acc = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * u2 + coeffs_[i];
    return acc * u2;
  }

  /// de/du
  double du(double u) const {
    const double u2 = u * u;
    double acc = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
      acc = acc * u2 + (2.0 * static_cast<double>(i) + 2.0) * coeffs_[i];
    return acc * u;
  }

private:
  std::vector<double> coeffs_;
};

class MetricOfRevolution {
public:
  MetricOfRevolution() = default;
  MetricOfRevolution(HFunction h, EvenPerturbation e = {}, std::string label = {})
      : h_(std::move(h)), e_(std::move(e)), label_(std::move(label)) {
    if (label_.empty()) label_ = h_.describe();
  }

  static MetricOfRevolution round() { return {HFunction::zero(), {}, "round"}; }

  const HFunction& h() const { return h_; }
  const EvenPerturbation& e() const { return e_; }
  const std::string& label() const { return label_; }

  /// Member of the odd-h Zoll family (no even perturbation).
  bool zoll_candidate() const { return e_.is_zero(); }

  /// f(u) without domain checks; used on hot paths with u = cos r.
  double f_unchecked(double u) const { return 1.0 + h_(u) + e_(u); }

  /// F(r) = f(cos r).
  double f_of_r(double r) const { return 1.0 + h_.of_r(r) + e_(std::cos(r)); }

private:
  HFunction h_;
  EvenPerturbation e_;
  std::string label_;
};

inline double eval_f(const MetricOfRevolution& m, double u) {
  if (!(std::abs(u) <= 1.0)) throw DomainError("eval_f: |u| must not exceed 1");
  return m.f_unchecked(u);
}

// ---------------------------------------------------------------------------
// Validation

enum class Invariant { Oddness, Range, Endpoint, Positivity };

inline const char* to_string(Invariant inv) {
  switch (inv) {
    case Invariant::Oddness: return "oddness";
    case Invariant::Range: return "range";
    case Invariant::Endpoint: return "endpoint";
    case Invariant::Positivity: return "positivity";
  }
  return "?";
}

struct Violation {
  Invariant invariant;
  double witness_u;
  double value;  // the offending quantity at the witness
};

struct ValidationReport {
  std::vector<Violation> violations;
  double max_abs_h = 0.0;
  double max_abs_h_at = 0.0;
  double min_f = 0.0;

  bool ok() const { return violations.empty(); }
  bool has(Invariant inv) const {
    return std::any_of(violations.begin(), violations.end(),
                       [inv](const Violation& v) { return v.invariant == inv; });
  }
};

/// Checks oddness, |h| < 1, h(+-1) == 0 and f > 0 on n_samples uniform points of [-1, 1].
inline ValidationReport validate(const MetricOfRevolution& m, std::size_t n_samples = 1001,
                                 double oddness_tol = 1e-12, double endpoint_tol = 1e-12) {
  if (n_samples < 3) throw DomainError("validate: need at least 3 samples");
  ValidationReport rep;
  rep.min_f = m.f_unchecked(-1.0);
  double worst_odd = 0.0, worst_odd_u = 0.0;
  double min_f_u = -1.0;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double u = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(n_samples - 1);
    const double hu = m.h()(u);
    // ties resolve toward the larger u
    if (std::abs(hu) >= rep.max_abs_h) {
      rep.max_abs_h = std::abs(hu);
      rep.max_abs_h_at = u;
    }
    const double odd = std::abs(hu + m.h()(-u));
    if (odd > worst_odd) {
      worst_odd = odd;
      worst_odd_u = u;
    }
    const double fu = m.f_unchecked(u);
    if (fu < rep.min_f) {
      rep.min_f = fu;
      min_f_u = u;
    }
  }
  if (worst_odd > oddness_tol) rep.violations.push_back({Invariant::Oddness, worst_odd_u, worst_odd});
  if (!(rep.max_abs_h < 1.0))
    rep.violations.push_back({Invariant::Range, rep.max_abs_h_at, rep.max_abs_h});
  const double h_plus = m.h()(1.0), h_minus = m.h()(-1.0);
  if (std::abs(h_plus) > endpoint_tol || std::abs(h_minus) > endpoint_tol) {
    const bool plus_worse = std::abs(h_plus) >= std::abs(h_minus);
    rep.violations.push_back(
        {Invariant::Endpoint, plus_worse ? 1.0 : -1.0, plus_worse ? h_plus : h_minus});
  }
  if (!(rep.min_f > 0.0)) rep.violations.push_back({Invariant::Positivity, min_f_u, rep.min_f});
  return rep;
}

// ---------------------------------------------------------------------------
// Curvature

inline constexpr double default_pole_margin = 1e-6;

/// Closed-form Gauss curvature of a Zoll-family metric,
///   sigma = (1 + h - u h'(u)) / (1 + h)^3,
/// with u h'(u) = -(cos r / sin r) d/dr[h(cos r)].
inline double sectional_curvature(const MetricOfRevolution& m, double r,
                                  double pole_margin = default_pole_margin) {
  if (!m.zoll_candidate())
    throw FamilyError("sectional_curvature: closed form requires e == 0");
  if (!(r >= pole_margin && r <= pi - pole_margin))
    throw PoleProximityError("sectional_curvature: r within pole margin");
  const double u = std::cos(r);
  const double hu = m.h().of_r(r);
  const double u_dh = -(u / std::sin(r)) * m.h().dr(r);
  const double f = 1.0 + hu;
  return (f - u_dh) / (f * f * f);
}

/// K = -(1 / (F sin r)) d/dr[cos r / F] with F = f o cos, derivative by central differences.
inline double numerical_gauss_curvature(const MetricOfRevolution& m, double r, double step) {
  if (!(step > 0.0)) throw DomainError("numerical_gauss_curvature: step must be positive");
  if (!(r - step > 0.0 && r + step < pi))
    throw DomainError("numerical_gauss_curvature: stencil leaves (0, pi)");
  auto ratio = [&](double x) { return std::cos(x) / m.f_of_r(x); };
  const double d = (ratio(r + step) - ratio(r - step)) / (2.0 * step);
  return -d / (m.f_of_r(r) * std::sin(r));
}

struct CurvatureSample {
  double r;
  double sigma;
};

struct CurvatureProfile {
  std::vector<CurvatureSample> samples;

  double min() const {
    double v = samples.front().sigma;
    for (const auto& s : samples) v = std::min(v, s.sigma);
    return v;
  }
  double max() const {
    double v = samples.front().sigma;
    for (const auto& s : samples) v = std::max(v, s.sigma);
    return v;
  }
};

inline CurvatureProfile curvature_profile(const MetricOfRevolution& m, std::size_t n,
                                          double pole_margin = default_pole_margin) {
  if (!m.zoll_candidate()) throw FamilyError("curvature_profile: requires e == 0");
  if (n < 2) throw DomainError("curvature_profile: need at least 2 samples");
  CurvatureProfile prof;
  prof.samples.reserve(n);
  const double lo = pole_margin, hi = pi - pole_margin;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    prof.samples.push_back({r, sectional_curvature(m, r, pole_margin)});
  }
  return prof;
}

// ---------------------------------------------------------------------------
// Descent to RP^2

/// The antipodal map (r, theta) -> (pi - r, theta + pi) is an isometry iff f(u) == f(-u).
struct DescentVerdict {
  bool descends = false;
  double witness_u = 0.0;  // argmax of |f(u) - f(-u)|, u >= 0
  double asymmetry = 0.0;  // |f(u) - f(-u)| at the witness
};

inline DescentVerdict rp2_descent_check(const MetricOfRevolution& m, std::size_t n_samples = 2001,
                                        double tol = 1e-12) {
  auto asym = [&](double u) { return std::abs(m.f_unchecked(u) - m.f_unchecked(-u)); };
  DescentVerdict v;
  std::size_t best = 0;
  const auto at = [&](std::size_t i) {
    return static_cast<double>(i) / static_cast<double>(n_samples - 1);
  };
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double a = asym(at(i));
    if (a > v.asymmetry) {
      v.asymmetry = a;
      best = i;
    }
  }
  v.witness_u = at(best);
  v.descends = v.asymmetry < tol;
  if (!v.descends) {
    // golden-section refinement of the maximizer inside the bracketing cell
    double lo = at(best == 0 ? 0 : best - 1);
    double hi = at(std::min(best + 1, n_samples - 1));
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
    double a1 = asym(x1), a2 = asym(x2);
    for (int it = 0; it < 80 && hi - lo > 1e-13; ++it) {
      if (a1 > a2) {
        hi = x2; x2 = x1; a2 = a1;
        x1 = hi - g * (hi - lo); a1 = asym(x1);
      } else {
        lo = x1; x1 = x2; a1 = a2;
        x2 = lo + g * (hi - lo); a2 = asym(x2);
      }
    }
    const double xm = 0.5 * (lo + hi);
    if (asym(xm) > v.asymmetry) {
      v.witness_u = xm;
      v.asymmetry = asym(xm);
    }
  }
  return v;
}

}  // namespace zollgeo
