#ifndef EULERFLUX_EXACT_RIEMANN_HPP
#define EULERFLUX_EXACT_RIEMANN_HPP

#include "eulerflux/euler.hpp"

namespace eulerflux {

enum class WaveType { Shock, Rarefaction };

/// Self-similar solution of the 1D Riemann problem (x-direction), sampled at
/// the similarity coordinate xi = x/t. Tangential velocity is transported
/// passively with the contact.
struct RiemannFan {
  PrimitiveState left, right;
  GasModel gas;
  double p_star{0.0};
  double v_star{0.0};
  double rho_star_left{0.0};
  double rho_star_right{0.0};
  WaveType left_wave{WaveType::Rarefaction};
  WaveType right_wave{WaveType::Rarefaction};
  // shock speed, or (head, tail) speeds of a rarefaction
  double left_speed_head{0.0}, left_speed_tail{0.0};
  double right_speed_head{0.0}, right_speed_tail{0.0};
  bool vacuum{false};

  PrimitiveState sample(double xi) const;
};

/// Solves the star-region pressure with Newton iteration started from the
/// two-rarefaction approximation, falling back to bisection; |dp| <= 1e-12 p*.
RiemannFan exact_riemann(const PrimitiveState& left, const PrimitiveState& right,
                         const GasModel& g);

inline PrimitiveState exact_riemann_sample(const PrimitiveState& left,
                                           const PrimitiveState& right, double xi,
                                           const GasModel& g) {
  return exact_riemann(left, right, g).sample(xi);
}

}  // namespace eulerflux

#endif
