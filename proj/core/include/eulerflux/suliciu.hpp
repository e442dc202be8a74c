#ifndef EULERFLUX_SULICIU_HPP
#define EULERFLUX_SULICIU_HPP

#include "eulerflux/euler.hpp"

namespace eulerflux {

/// Relaxation speeds and star states of the Suliciu solver. The speeds c are
/// densities times velocities; c/rho are the signal speeds entering the CFL
/// condition.
struct SuliciuIntermediates {
  double c_minus, c_plus;
  double p_star, v_star;
  double rho_star_minus, rho_star_plus;
  double eps_star_minus, eps_star_plus;
};

SuliciuIntermediates suliciu_intermediates(const PrimitiveState& qm,
                                           const PrimitiveState& qp, Axis dir,
                                           const GasModel& g);

/// Suliciu relaxation flux; resolves stationary contacts exactly and is
/// positivity preserving under dt/dx * suliciu_cfl <= 1/2.
FluxVector suliciu_flux(const PrimitiveState& qm, const PrimitiveState& qp, Axis dir,
                        const GasModel& g);

/// max(|v- - c-/rho-|, |v+ + c+/rho+|).
double suliciu_cfl(const PrimitiveState& qm, const PrimitiveState& qp, Axis dir,
                   const GasModel& g);

}  // namespace eulerflux

#endif
