#pragma once

#include <string>

#include "asrc/linalg.hpp"

namespace asrc {

/// Constants of the plant properties: mu1 I <= M <= mu2 I, ||C|| <= c_b ||qd||,
/// ||g|| <= g_b, ||f(qd)|| <= f_b ||qd||, ||d_s|| <= d_bar.
struct PlantConstants {
  double mu1 = 0.0;
  double mu2 = 0.0;
  double c_b = 0.0;
  double g_b = 0.0;
  double f_b = 0.0;
  double d_bar = 0.0;
};

/// Viscous plus smoothed Coulomb friction, f_i = viscous * qd_i + coulomb * tanh(qd_i / smoothing).
struct FrictionModel {
  double viscous = 0.5;
  double coulomb = 1.0;
  double smoothing = 0.01;

  Vec eval(const Vec& qd) const;
  /// Smallest f_b with ||f(qd)|| <= f_b ||qd|| (tanh(x) <= x).
  double linear_bound() const { return viscous + coulomb / smoothing; }
};

/// Per-channel sinusoidal disturbance amplitude * sin(2 pi t / period).
struct DisturbanceModel {
  double amplitude = 0.5;
  double period = 3.0;

  Vec eval(double t, std::size_t n) const;
  double bound(std::size_t n) const;
};

/// Euler-Lagrange plant M(q) qdd + C(q, qd) qd + g(q) + f(qd) + d_s(t) = tau.
///
/// Evaluation is pure given (state, t). The time argument of `mass` lets a
/// plant carry a time-varying payload that the controller never sees.
class PlantModel {
 public:
  virtual ~PlantModel() = default;

  virtual std::size_t dof() const = 0;
  virtual std::string name() const = 0;

  virtual Mat mass(const Vec& q, double t) const = 0;
  virtual Mat coriolis(const Vec& q, const Vec& qd, double t) const = 0;
  virtual Vec gravity(const Vec& q) const = 0;
  virtual Vec friction(const Vec& qd) const = 0;
  virtual Vec disturbance(double t) const = 0;

  virtual PlantConstants constants() const = 0;

  /// qdd = M^-1 (tau - C qd - g - f - d_s). Throws InvalidPlantError when M is
  /// not positive definite.
  Vec acceleration(const Vec& q, const Vec& qd, const Vec& tau, double t) const;
};

}  // namespace asrc
