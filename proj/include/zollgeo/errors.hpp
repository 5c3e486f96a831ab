#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace zollgeo {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr double half_pi = 0.5 * std::numbers::pi;

/// Argument outside the domain of an operation (|u| > 1, t outside (0, pi/2), ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Operation restricted to a sub-family of metrics was called on another one.
class FamilyError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The (r, theta) chart degenerates at the poles.
class PoleProximityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class StepFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NoReturnError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Wraps an angle into (-pi, pi].
inline double wrap_signed(double a) {
  double w = std::remainder(a, two_pi);
  if (w <= -pi) w += two_pi;
  return w;
}

/// Wraps an angle into [0, 2pi).
inline double wrap_positive(double a) {
  double w = std::fmod(a, two_pi);
  if (w < 0.0) w += two_pi;
  if (w >= two_pi) w -= two_pi;
  return w;
}

}  // namespace zollgeo
