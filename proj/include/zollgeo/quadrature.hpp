#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace zollgeo {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

namespace detail {

// Returns (P_n(x), P_n'(x)) by the three-term recurrence.
inline std::pair<double, double> legendre_with_derivative(std::size_t n, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (std::size_t k = 2; k <= n; ++k) {
    const double kk = static_cast<double>(k);
    const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
    p0 = p1;
    p1 = p2;
  }
  const double pn = (n == 1) ? x : p1;
  const double pnm1 = (n == 1) ? 1.0 : p0;
  return {pn, static_cast<double>(n) * (x * pn - pnm1) / (x * x - 1.0)};
}

inline GaussLegendreRule compute_gauss_legendre(std::size_t n) {
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    for (int it = 0; it < 100; ++it) {
      const auto [pn, dp] = legendre_with_derivative(n, x);
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = legendre_with_derivative(n, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

}  // namespace detail

/// Cached n-point rule; thread-safe.
inline const GaussLegendreRule& gauss_legendre(std::size_t n) {
  if (n == 0) throw std::invalid_argument("gauss_legendre: n must be positive");
  static std::mutex mutex;
  static std::map<std::size_t, GaussLegendreRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, detail::compute_gauss_legendre(n)).first;
  return it->second;
}

/// n-point Gauss-Legendre approximation of the integral of fn over [a, b].
template <class Fn>
double integrate_gauss_legendre(Fn&& fn, double a, double b, std::size_t n) {
  const auto& rule = gauss_legendre(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += rule.weights[i] * fn(mid + half * rule.nodes[i]);
  return half * sum;
}

}  // namespace zollgeo
