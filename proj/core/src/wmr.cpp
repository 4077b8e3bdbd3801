#include "asrc/wmr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "asrc/errors.hpp"

namespace asrc {

PayloadSchedule periodic_payload(double on, double off, double mass, double inertia,
                                 double horizon) {
  PayloadSchedule out;
  if (!(on > 0.0) || !(off >= 0.0)) return out;
  for (double t = 0.0; t < horizon; t += on + off) {
    out.push_back({t, std::min(t + on, horizon), mass, inertia});
  }
  return out;
}

Mat wmr_reduced_mass(const WmrParams& p) {
  const double ratio = p.wheel_radius * p.wheel_radius / (p.track_width * p.track_width);
  const double b2 = p.track_width * p.track_width / 4.0;
  const double d2 = p.cm_offset * p.cm_offset;
  const double k1 = p.wheel_inertia + (p.inertia + p.mass * (b2 - d2)) * ratio;
  const double k2 = (p.mass * (b2 + d2) - p.inertia) * ratio;
  if (!(k1 > std::abs(k2))) {
    throw InvalidPlantError("wmr_reduced_mass: need k1 > |k2| (k1 = " + std::to_string(k1) +
                            ", k2 = " + std::to_string(k2) + ")");
  }
  Mat m(2, 2);
  m << k1, k2, k2, k1;
  return m;
}

Eigen::Matrix<double, 5, 2> wmr_kinematics_S(double phi, const WmrParams& p) {
  const double r = p.wheel_radius;
  const double b = p.track_width;
  const double d = p.cm_offset;
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  Eigen::Matrix<double, 5, 2> S;
  S << r / b * (b / 2 * c - d * s), r / b * (b / 2 * c + d * s),
       r / b * (b / 2 * s + d * c), r / b * (b / 2 * s - d * c),
       r / b, -r / b,
       1.0, 0.0,
       0.0, 1.0;
  return S;
}

Eigen::Matrix<double, 5, 2> wmr_kinematics_S(const Vec& q, const WmrParams& p) {
  if (q.size() < 3) throw ConfigError("wmr_kinematics_S: pose vector needs the heading at index 2");
  return wmr_kinematics_S(q[2], p);
}

Vec wmr_reduced_dynamics(const Mat& reduced_mass, const Vec& tau, const Vec& friction,
                         const Vec& disturbance) {
  Eigen::FullPivLU<Mat> lu(reduced_mass);
  if (!lu.isInvertible()) throw InvalidPlantError("wmr_reduced_dynamics: M_R is singular");
  return lu.solve(tau - friction - disturbance);
}

WmrPlant::WmrPlant(WmrParams params, FrictionModel friction, DisturbanceModel disturbance,
                   PayloadSchedule payload)
    : params_(params), friction_(friction), disturbance_(disturbance), payload_(std::move(payload)) {
  if (!(params_.mass >= 0.0 && params_.inertia >= 0.0 && params_.wheel_inertia > 0.0 &&
        params_.wheel_radius > 0.0 && params_.track_width > 0.0 && params_.cm_offset >= 0.0 &&
        params_.command_scale > 0.0)) {
    throw InvalidPlantError("WmrPlant: parameters must be positive");
  }
  // Validates k1 > |k2| for the bare platform.
  (void)wmr_reduced_mass(params_);
}

WmrParams WmrPlant::params_at(double t) const {
  WmrParams p = params_;
  for (const auto& ev : payload_) {
    if (t >= ev.t_on && t < ev.t_off) {
      p.mass += ev.mass;
      p.inertia += ev.inertia;
    }
  }
  return p;
}

Mat WmrPlant::mass(const Vec& /*q*/, double t) const {
  const WmrParams p = params_at(t);
  return p.command_scale * wmr_reduced_mass(p);
}

Mat WmrPlant::coriolis(const Vec& /*q*/, const Vec& /*qd*/, double /*t*/) const {
  return Mat::Zero(2, 2);
}

Vec WmrPlant::gravity(const Vec& /*q*/) const { return Vec::Zero(2); }

Vec WmrPlant::friction(const Vec& qd) const { return friction_.eval(qd); }

Vec WmrPlant::disturbance(double t) const { return disturbance_.eval(t, 2); }

PlantConstants WmrPlant::constants() const {
  // k1 +/- k2 are affine in (m, I_bar), so their extremes over the payload
  // box sit at its corners.
  double dm = 0.0;
  double di = 0.0;
  for (const auto& ev : payload_) {
    dm += std::max(ev.mass, 0.0);
    di += std::max(ev.inertia, 0.0);
  }
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (double xm : {0.0, dm}) {
    for (double xi : {0.0, di}) {
      WmrParams p = params_;
      p.mass += xm;
      p.inertia += xi;
      const Mat m = p.command_scale * wmr_reduced_mass(p);
      const double k1 = m(0, 0);
      const double k2 = m(0, 1);
      lo = std::min(lo, k1 - std::abs(k2));
      hi = std::max(hi, k1 + std::abs(k2));
    }
  }
  PlantConstants c;
  c.mu1 = lo;
  c.mu2 = hi;
  c.c_b = 0.0;
  c.g_b = 0.0;
  c.f_b = friction_.linear_bound();
  c.d_bar = disturbance_.bound(2);
  return c;
}

}  // namespace asrc
