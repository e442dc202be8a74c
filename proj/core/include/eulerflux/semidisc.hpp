#ifndef EULERFLUX_SEMIDISC_HPP
#define EULERFLUX_SEMIDISC_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eulerflux/dissipation.hpp"
#include "eulerflux/mesh.hpp"
#include "eulerflux/sbp.hpp"
#include "eulerflux/suliciu.hpp"
#include "eulerflux/volume_flux.hpp"

namespace eulerflux {

/// Numerical flux at element interfaces: an entropy conservative base plus a
/// dissipation operator, the classical LLF flux, or the Suliciu solver.
struct SurfaceScheme {
  enum class Family { EcWithDissipation, ClassicLLF, Suliciu };
  Family family{Family::EcWithDissipation};
  VolumeFluxSpec base{};
  DissipationKind diss{DissipationKind::None};

  FluxVector flux(const PrimitiveState& qm, const PrimitiveState& qp, Axis dir,
                  const GasModel& g) const;
  std::string name() const;
};

/// Parses "llf-classic", "suliciu", or "BASE[+DISS]" such as "ch1+llf".
std::optional<SurfaceScheme> surface_scheme_from_name(std::string_view name);

struct StepPolicy {
  int steps{0};    // > 0: fixed number of uniform steps
  double cfl{0.0};  // used when steps == 0
};

struct SchemeConfig {
  VolumeFluxSpec volume{};
  SurfaceScheme surface{};
  int degree{0};  // 0 selects the first-order finite volume path
  StepPolicy policy{};
};

struct Solution {
  Mesh mesh;
  int degree{0};
  std::vector<Vec4> u;  // element-major nodal values
  double time{0.0};
};

struct CrashInfo {
  long step{0};
  double time{0.0};
  int element{0};
  int node{0};
  std::string quantity;  // "rho", "p", or "finite"
};

struct RunResult {
  Solution solution;
  std::optional<CrashInfo> crash;
  bool crashed() const { return crash.has_value(); }
};

/// Flux-differencing semidiscretization on a uniform mesh; degree 0 drops the
/// volume terms and reduces to the first order finite volume scheme.
class Semidiscretization {
 public:
  Semidiscretization(Mesh mesh, int degree, SchemeConfig scheme, GasModel gas);

  const Mesh& mesh() const { return mesh_; }
  const SbpOperator& op() const { return op_; }
  const GasModel& gas() const { return gas_; }
  int degree() const { return degree_; }
  int nodes_per_element() const { return nodes_per_element_; }
  int num_nodes() const { return num_nodes_; }

  double node_x(int element, int node) const;
  double node_y(int element, int node) const;
  /// Physical quadrature weight of a node.
  double node_mass(int node_in_element) const;

  void set_exterior_states(const PrimitiveState& left, const PrimitiveState& right);

  std::vector<Vec4> project(
      const std::function<PrimitiveState(double, double)>& q0) const;

  /// -VOL - SURF. Throws on inadmissible nodal states.
  std::vector<Vec4> rhs(const std::vector<Vec4>& u) const;

  /// Volume terms alone (approximation of div f); used by the order tests.
  std::vector<Vec4> volume_terms(const std::vector<Vec4>& u) const;

  /// Lifted surface terms M^{-1} R^T B N (f_num - R f); one flux evaluation
  /// per interface shared by both neighbors.
  std::vector<Vec4> surface_terms(const std::vector<Vec4>& u) const;

  /// When true, degree 0 executes the generic flux-differencing loops with
  /// the trivial one-node operator instead of short-circuiting them.
  void set_force_generic_path(bool on) { force_generic_ = on; }

  double stable_dt(const std::vector<Vec4>& u, double cfl) const;

  /// sum over elements of w^T M du/dt; scale receives sum |w||M du|.
  double entropy_rate(const std::vector<Vec4>& u, double* scale = nullptr) const;

  /// Componentwise d/dt of the mass-weighted totals.
  Vec4 conservation_rate(const std::vector<Vec4>& u) const;

 private:
  Mesh mesh_;
  int degree_;
  SchemeConfig scheme_;
  GasModel gas_;
  SbpOperator op_;
  int nodes_per_element_;
  int num_nodes_;
  bool force_generic_{false};
  std::optional<PrimitiveState> exterior_left_, exterior_right_;

  void add_volume_terms(const std::vector<PrimitiveState>& q,
                        std::vector<Vec4>& out) const;
  void add_surface_terms(const std::vector<PrimitiveState>& q,
                         std::vector<Vec4>& out) const;
};

/// Three-stage Shu-Osher SSPRK3 step for any state with axpy support.
template <class State, class Rhs>
State ssprk3_step(const State& u, Rhs&& rhs, double dt);

namespace detail {
inline double lincomb(double a, double u, double b, double w) { return a * u + b * w; }
inline double apply_dt(double u, double dt, double k) { return u + dt * k; }
inline std::vector<Vec4> lincomb(double a, const std::vector<Vec4>& u, double b,
                                 const std::vector<Vec4>& w) {
  std::vector<Vec4> r(u.size());
  for (size_t i = 0; i < u.size(); ++i) r[i] = a * u[i] + b * w[i];
  return r;
}
inline std::vector<Vec4> apply_dt(const std::vector<Vec4>& u, double dt,
                                  const std::vector<Vec4>& k) {
  std::vector<Vec4> r(u.size());
  for (size_t i = 0; i < u.size(); ++i) r[i] = u[i] + dt * k[i];
  return r;
}
}  // namespace detail

template <class State, class Rhs>
State ssprk3_step(const State& u, Rhs&& rhs, double dt) {
  using detail::apply_dt;
  using detail::lincomb;
  const State u1 = apply_dt(u, dt, rhs(u));
  const State u2 = lincomb(0.75, u, 0.25, apply_dt(u1, dt, rhs(u1)));
  return lincomb(1.0 / 3.0, u, 2.0 / 3.0, apply_dt(u2, dt, rhs(u2)));
}

/// One explicit Euler finite volume step on a row of cell states with given
/// boundary treatment; returns the updated row. Used by the positivity
/// experiments. ghost_left/ghost_right supply exterior states; if absent, the
/// row is treated as periodic.
std::vector<Vec4> fv_euler_step(const std::vector<Vec4>& row,
                                const SurfaceScheme& flux, double dt, double dx,
                                const GasModel& g,
                                const std::optional<Vec4>& ghost_left = std::nullopt,
                                const std::optional<Vec4>& ghost_right = std::nullopt);

struct SimulationSetup {
  Mesh mesh;
  GasModel gas;
  SchemeConfig scheme;
  double t_final{0.0};
  std::function<PrimitiveState(double, double)> initial;
  // weak Dirichlet exterior values (1D); ignored for periodic meshes
  std::optional<PrimitiveState> exterior_left, exterior_right;
};

RunResult run_simulation(const SimulationSetup& setup);

}  // namespace eulerflux

#endif
