#ifndef EULERFLUX_DISSIPATION_HPP
#define EULERFLUX_DISSIPATION_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "eulerflux/euler.hpp"
#include "eulerflux/volume_flux.hpp"

namespace eulerflux {

enum class DissipationKind { None, LLF, ScalarSD, MatrixMD, HybridHD };

std::string_view dissipation_name(DissipationKind kind);
std::optional<DissipationKind> dissipation_from_name(std::string_view name);
const std::vector<DissipationKind>& all_dissipation_kinds();

using Mat4 = std::array<std::array<double, 4>, 4>;

Vec4 mat_vec(const Mat4& m, const Vec4& v);

/// du/dw for the entropy U = -rho*s/(gamma-1), evaluated at q.
Mat4 entropy_jacobian(const PrimitiveState& q, const GasModel& g);

/// Eigendecomposition of f'(u) in direction dir with Barth's scaling,
/// R R^T = du/dw. Columns of R ordered (v-a, v, v, v+a).
struct ScaledEigensystem {
  Mat4 R;
  Vec4 lambda;
};
ScaledEigensystem barth_eigensystem(const PrimitiveState& q, Axis dir,
                                    const GasModel& g);

/// Intermediate state at which the SD/MD/HD operator matrices are evaluated:
/// rho = logmean, velocities and pressure arithmetic means.
PrimitiveState dissipation_average_state(const PrimitiveState& qm,
                                         const PrimitiveState& qp, const GasModel& g);

/// Classical local Lax-Friedrichs flux {f} - (lambda/2) jump(u).
FluxVector llf_flux(const PrimitiveState& qm, const PrimitiveState& qp, Axis dir,
                    const GasModel& g);

/// Entropy conservative base flux plus the selected dissipation term.
FluxVector dissipative_flux(const VolumeFluxSpec& base, DissipationKind diss,
                            const PrimitiveState& qm, const PrimitiveState& qp,
                            Axis dir, const GasModel& g);

}  // namespace eulerflux

#endif
