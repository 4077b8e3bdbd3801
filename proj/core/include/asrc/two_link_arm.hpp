#pragma once

#include <array>

#include "asrc/plant.hpp"

namespace asrc {

/// Planar two-link arm with uniform rods, joint angles measured from the
/// horizontal. Gives a plant with non-zero Coriolis terms.
struct TwoLinkParams {
  std::array<double, 2> link_mass{1.0, 1.0};    // kg
  std::array<double, 2> link_length{0.5, 0.5};  // m
  double gravity = 9.81;                         // m/s^2

  friend bool operator==(const TwoLinkParams&, const TwoLinkParams&) = default;
};

class TwoLinkArm final : public PlantModel {
 public:
  TwoLinkArm(TwoLinkParams params, FrictionModel friction, DisturbanceModel disturbance);

  std::size_t dof() const override { return 2; }
  std::string name() const override { return "two_link"; }

  Mat mass(const Vec& q, double t) const override;
  Mat coriolis(const Vec& q, const Vec& qd, double t) const override;
  Vec gravity(const Vec& q) const override;
  Vec friction(const Vec& qd) const override;
  Vec disturbance(double t) const override;
  PlantConstants constants() const override;

  double kinetic_energy(const Vec& q, const Vec& qd) const;
  double potential_energy(const Vec& q) const;

 private:
  TwoLinkParams params_;
  FrictionModel friction_;
  DisturbanceModel disturbance_;
  // Inertia parameters of the standard two-link form.
  double a1_ = 0.0;
  double a2_ = 0.0;
  double a3_ = 0.0;
};

}  // namespace asrc
