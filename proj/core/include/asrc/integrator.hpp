#pragma once

#include <optional>

#include "asrc/linalg.hpp"

namespace asrc {

/// (q, qd) of a second-order system.
struct MechState {
  Vec q;
  Vec qd;
};

inline bool is_finite(const MechState& s) { return all_finite(s.q) && all_finite(s.qd); }

/// One classical RK4 step of y' = f(t, y). Returns nullopt if the result is
/// not finite.
template <class F>
std::optional<Vec> rk4_step(F&& f, const Vec& y, double t, double h) {
  const Vec k1 = f(t, y);
  const Vec k2 = f(t + 0.5 * h, Vec(y + 0.5 * h * k1));
  const Vec k3 = f(t + 0.5 * h, Vec(y + 0.5 * h * k2));
  const Vec k4 = f(t + h, Vec(y + h * k3));
  Vec next = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  if (!all_finite(next)) return std::nullopt;
  return next;
}

/// RK4 on the first-order form (q, qd)' = (qd, accel(t, q, qd)).
template <class Accel>
std::optional<MechState> rk4_step(Accel&& accel, const MechState& s, double t, double h) {
  const auto n = s.q.size();
  Vec y(2 * n);
  y << s.q, s.qd;
  auto rhs = [&](double tt, const Vec& yy) {
    Vec dy(2 * n);
    dy << yy.tail(n), accel(tt, Vec(yy.head(n)), Vec(yy.tail(n)));
    return dy;
  };
  auto next = rk4_step(rhs, y, t, h);
  if (!next) return std::nullopt;
  return MechState{next->head(n), next->tail(n)};
}

}  // namespace asrc
