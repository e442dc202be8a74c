#ifndef EULERFLUX_VOLUME_FLUX_HPP
#define EULERFLUX_VOLUME_FLUX_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eulerflux/euler.hpp"

namespace eulerflux {

/// Two-point volume fluxes: ten entropy conservative families plus five
/// split-form fluxes that are symmetric and consistent but not EC.
enum class VolumeFluxKind {
  IR,         // Ismail-Roe, variables sqrt(rho/p), sqrt(rho/p) v, sqrt(rho p)
  Ch1,        // Chandrashekar rho, v, beta (KEP variant)
  Ch2,        // Chandrashekar rho, v, beta (second jump splitting)
  RhoVInvP,   // rho, v, 1/p
  RhoVP,      // rho, v, p
  RhoVT1,     // rho, v, RT (KEP variant)
  RhoVT2,     // rho, v, RT (second jump splitting)
  PowerR,     // rho, v, (rho/p)^{1/r} family
  ExpChi,     // rho, v, log(rho/p)
  ReversedT,  // rho, v, RT for the entropy/energy reversed system
  Central,
  Morinishi,
  Ducros,
  KG,
  Pirozzoli,
};

/// Volume flux selection plus the exponent of the r-power family.
struct VolumeFluxSpec {
  VolumeFluxKind kind{VolumeFluxKind::Ch1};
  double power_r{-1.0};
};

bool is_entropy_conservative(VolumeFluxKind kind);
std::string_view volume_flux_name(VolumeFluxKind kind);
std::optional<VolumeFluxKind> volume_flux_from_name(std::string_view name);
const std::vector<VolumeFluxKind>& ec_volume_flux_kinds();
const std::vector<VolumeFluxKind>& split_volume_flux_kinds();
const std::vector<VolumeFluxKind>& all_volume_flux_kinds();

FluxVector volume_flux(const VolumeFluxSpec& spec, const PrimitiveState& qm,
                       const PrimitiveState& qp, Axis dir, const GasModel& g);

inline FluxVector ec_volume_flux(VolumeFluxKind kind, const PrimitiveState& qm,
                                 const PrimitiveState& qp, Axis dir, const GasModel& g,
                                 double power_r = -1.0) {
  return volume_flux({kind, power_r}, qm, qp, dir, g);
}

inline FluxVector split_volume_flux(VolumeFluxKind kind, const PrimitiveState& qm,
                                    const PrimitiveState& qp, Axis dir,
                                    const GasModel& g) {
  return volume_flux({kind, -1.0}, qm, qp, dir, g);
}

/// jump(w) . f - jump(psi_dir); zero for EC fluxes, nonpositive certifies
/// entropy stability across the pair.
double ec_defect(const FluxVector& f, const PrimitiveState& qm,
                 const PrimitiveState& qp, Axis dir, const GasModel& g);

/// Numerical pressure of the kinetic-energy decomposition
/// f_mom_dir = <v_dir> f_rho + p_num.
double kep_pressure(const VolumeFluxSpec& spec, const PrimitiveState& qm,
                    const PrimitiveState& qp, Axis dir, const GasModel& g);

}  // namespace eulerflux

#endif
