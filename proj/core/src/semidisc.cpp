#include "eulerflux/semidisc.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace eulerflux {

namespace {

// Internal signal for an inadmissible nodal state encountered inside the
// right-hand side; converted to a CrashInfo by run_simulation.
struct CrashSignal {
  int element;
  int node;
  const char* quantity;
};

SbpOperator trivial_fv_operator() {
  SbpOperator op;
  op.degree = 0;
  op.nodes = {0.0};
  op.weights = {2.0};
  op.d = {0.0};
  return op;
}

}  // namespace

FluxVector SurfaceScheme::flux(const PrimitiveState& qm, const PrimitiveState& qp,
                               Axis dir, const GasModel& g) const {
  switch (family) {
    case Family::EcWithDissipation:
      return dissipative_flux(base, diss, qm, qp, dir, g);
    case Family::ClassicLLF:
      return llf_flux(qm, qp, dir, g);
    case Family::Suliciu:
      return suliciu_flux(qm, qp, dir, g);
  }
  throw std::logic_error("unhandled surface flux family");
}

std::string SurfaceScheme::name() const {
  switch (family) {
    case Family::ClassicLLF:
      return "llf-classic";
    case Family::Suliciu:
      return "suliciu";
    case Family::EcWithDissipation: {
      std::string n{volume_flux_name(base.kind)};
      if (diss != DissipationKind::None) {
        n += '+';
        n += dissipation_name(diss);
      }
      return n;
    }
  }
  return "?";
}

std::optional<SurfaceScheme> surface_scheme_from_name(std::string_view name) {
  SurfaceScheme s;
  if (name == "llf-classic") {
    s.family = SurfaceScheme::Family::ClassicLLF;
    return s;
  }
  if (name == "suliciu") {
    s.family = SurfaceScheme::Family::Suliciu;
    return s;
  }
  s.family = SurfaceScheme::Family::EcWithDissipation;
  std::string_view base = name;
  std::string_view diss;
  if (auto pos = name.find('+'); pos != std::string_view::npos) {
    base = name.substr(0, pos);
    diss = name.substr(pos + 1);
  }
  const auto kind = volume_flux_from_name(base);
  if (!kind || !is_entropy_conservative(*kind)) return std::nullopt;
  s.base.kind = *kind;
  if (!diss.empty()) {
    const auto d = dissipation_from_name(diss);
    if (!d) return std::nullopt;
    s.diss = *d;
  } else {
    s.diss = DissipationKind::None;
  }
  return s;
}

Semidiscretization::Semidiscretization(Mesh mesh, int degree, SchemeConfig scheme,
                                       GasModel gas)
    : mesh_(mesh),
      degree_(degree),
      scheme_(std::move(scheme)),
      gas_(gas),
      op_(degree == 0 ? trivial_fv_operator() : build_lobatto_sbp(degree)) {
  const int n = op_.n();
  nodes_per_element_ = mesh_.dimension == 1 ? n : n * n;
  num_nodes_ = mesh_.num_elements() * nodes_per_element_;
  if (mesh_.dimension == 2 && mesh_.boundary != BoundaryKind::Periodic)
    throw std::invalid_argument("2D meshes support periodic boundaries only");
}

double Semidiscretization::node_x(int element, int node) const {
  const int n = op_.n();
  const int ex = mesh_.dimension == 1 ? element : element % mesh_.nx;
  const int i = mesh_.dimension == 1 ? node : node % n;
  return mesh_.element_x(ex) + 0.5 * (op_.nodes[i] + 1.0) * mesh_.dx();
}

double Semidiscretization::node_y(int element, int node) const {
  if (mesh_.dimension == 1) return 0.0;
  const int n = op_.n();
  const int ey = element / mesh_.nx;
  const int j = node / n;
  return mesh_.element_y(ey) + 0.5 * (op_.nodes[j] + 1.0) * mesh_.dy();
}

double Semidiscretization::node_mass(int node_in_element) const {
  const int n = op_.n();
  if (mesh_.dimension == 1) return 0.5 * mesh_.dx() * op_.weights[node_in_element];
  const int i = node_in_element % n;
  const int j = node_in_element / n;
  return 0.25 * mesh_.dx() * mesh_.dy() * op_.weights[i] * op_.weights[j];
}

void Semidiscretization::set_exterior_states(const PrimitiveState& left,
                                             const PrimitiveState& right) {
  exterior_left_ = left;
  exterior_right_ = right;
}

std::vector<Vec4> Semidiscretization::project(
    const std::function<PrimitiveState(double, double)>& q0) const {
  std::vector<Vec4> u(num_nodes_);
  for (int e = 0; e < mesh_.num_elements(); ++e)
    for (int i = 0; i < nodes_per_element_; ++i)
      u[e * nodes_per_element_ + i] =
          prim_to_cons(q0(node_x(e, i), node_y(e, i)), gas_);
  return u;
}

namespace {

std::vector<PrimitiveState> to_primitive_checked(const std::vector<Vec4>& u,
                                                 int nodes_per_element,
                                                 const GasModel& g) {
  std::vector<PrimitiveState> q(u.size());
  for (size_t idx = 0; idx < u.size(); ++idx) {
    const Vec4& ui = u[idx];
    const int e = static_cast<int>(idx) / nodes_per_element;
    const int i = static_cast<int>(idx) % nodes_per_element;
    if (!std::isfinite(ui[0]) || !std::isfinite(ui[1]) || !std::isfinite(ui[2]) ||
        !std::isfinite(ui[3]))
      throw CrashSignal{e, i, "finite"};
    if (!(ui[0] > 0.0)) throw CrashSignal{e, i, "rho"};
    q[idx] = cons_to_prim(ui, g);
    if (!(q[idx].p > 0.0)) throw CrashSignal{e, i, "p"};
  }
  return q;
}

}  // namespace

void Semidiscretization::add_volume_terms(const std::vector<PrimitiveState>& q,
                                          std::vector<Vec4>& out) const {
  if (degree_ == 0 && !force_generic_) return;
  const int n = op_.n();
  if (mesh_.dimension == 1) {
    const double jac = 2.0 / mesh_.dx();
    for (int e = 0; e < mesh_.nx; ++e) {
      const int base = e * n;
      for (int i = 0; i < n; ++i) {
        const FluxVector fd = volume_flux(scheme_.volume, q[base + i], q[base + i],
                                          Axis::x, gas_);
        out[base + i] = out[base + i] + (2.0 * jac * op_.D(i, i)) * fd;
        for (int k = i + 1; k < n; ++k) {
          const FluxVector f =
              volume_flux(scheme_.volume, q[base + i], q[base + k], Axis::x, gas_);
          out[base + i] = out[base + i] + (2.0 * jac * op_.D(i, k)) * f;
          out[base + k] = out[base + k] + (2.0 * jac * op_.D(k, i)) * f;
        }
      }
    }
    return;
  }
  const double jx = 2.0 / mesh_.dx();
  const double jy = 2.0 / mesh_.dy();
  for (int e = 0; e < mesh_.num_elements(); ++e) {
    const int base = e * nodes_per_element_;
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        const int a = base + j * n + i;
        const FluxVector fdx = volume_flux(scheme_.volume, q[a], q[a], Axis::x, gas_);
        out[a] = out[a] + (2.0 * jx * op_.D(i, i)) * fdx;
        for (int k = i + 1; k < n; ++k) {
          const int b = base + j * n + k;
          const FluxVector f = volume_flux(scheme_.volume, q[a], q[b], Axis::x, gas_);
          out[a] = out[a] + (2.0 * jx * op_.D(i, k)) * f;
          out[b] = out[b] + (2.0 * jx * op_.D(k, i)) * f;
        }
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const int a = base + j * n + i;
        const FluxVector fdy = volume_flux(scheme_.volume, q[a], q[a], Axis::y, gas_);
        out[a] = out[a] + (2.0 * jy * op_.D(j, j)) * fdy;
        for (int k = j + 1; k < n; ++k) {
          const int b = base + k * n + i;
          const FluxVector f = volume_flux(scheme_.volume, q[a], q[b], Axis::y, gas_);
          out[a] = out[a] + (2.0 * jy * op_.D(j, k)) * f;
          out[b] = out[b] + (2.0 * jy * op_.D(k, j)) * f;
        }
      }
    }
  }
}

void Semidiscretization::add_surface_terms(const std::vector<PrimitiveState>& q,
                                           std::vector<Vec4>& out) const {
  const int n = op_.n();
  const GasModel& g = gas_;

  if (mesh_.dimension == 1) {
    const double m0 = 0.5 * mesh_.dx() * op_.weights[0];
    const double m1 = 0.5 * mesh_.dx() * op_.weights[n - 1];
    const bool periodic = mesh_.boundary == BoundaryKind::Periodic;
    const int first = periodic ? 0 : 1;
    // interior (and wrapped) interfaces: shared flux evaluation
    for (int iface = first; iface < mesh_.nx; ++iface) {
      const int el = iface == 0 ? mesh_.nx - 1 : iface - 1;
      const int er = iface;
      const int a = el * n + (n - 1);
      const int b = er * n + 0;
      const FluxVector fnum = scheme_.surface.flux(q[a], q[b], Axis::x, g);
      const FluxVector fl = physical_flux(q[a], Axis::x, g);
      const FluxVector fr = physical_flux(q[b], Axis::x, g);
      out[a] = out[a] + (1.0 / m1) * (fnum - fl);
      out[b] = out[b] - (1.0 / m0) * (fnum - fr);
    }
    if (!periodic) {
      // weak Dirichlet: exterior trace from the prescribed boundary states
      assert(exterior_left_ && exterior_right_);
      {
        const int b = 0;
        const FluxVector fnum = scheme_.surface.flux(*exterior_left_, q[b], Axis::x, g);
        const FluxVector fr = physical_flux(q[b], Axis::x, g);
        out[b] = out[b] - (1.0 / m0) * (fnum - fr);
      }
      {
        const int a = (mesh_.nx - 1) * n + (n - 1);
        const FluxVector fnum =
            scheme_.surface.flux(q[a], *exterior_right_, Axis::x, g);
        const FluxVector fl = physical_flux(q[a], Axis::x, g);
        out[a] = out[a] + (1.0 / m1) * (fnum - fl);
      }
    }
    return;
  }

  // 2D, periodic
  const double mx0 = 0.5 * mesh_.dx() * op_.weights[0];
  const double mx1 = 0.5 * mesh_.dx() * op_.weights[n - 1];
  const double my0 = 0.5 * mesh_.dy() * op_.weights[0];
  const double my1 = 0.5 * mesh_.dy() * op_.weights[n - 1];
  for (int ey = 0; ey < mesh_.ny; ++ey) {
    for (int ix = 0; ix < mesh_.nx; ++ix) {
      const int el = (ix == 0 ? mesh_.nx - 1 : ix - 1) + ey * mesh_.nx;
      const int er = ix + ey * mesh_.nx;
      for (int j = 0; j < n; ++j) {
        const int a = el * nodes_per_element_ + j * n + (n - 1);
        const int b = er * nodes_per_element_ + j * n + 0;
        const FluxVector fnum = scheme_.surface.flux(q[a], q[b], Axis::x, g);
        out[a] = out[a] + (1.0 / mx1) * (fnum - physical_flux(q[a], Axis::x, g));
        out[b] = out[b] - (1.0 / mx0) * (fnum - physical_flux(q[b], Axis::x, g));
      }
    }
  }
  for (int iy = 0; iy < mesh_.ny; ++iy) {
    for (int ex = 0; ex < mesh_.nx; ++ex) {
      const int el = ex + (iy == 0 ? mesh_.ny - 1 : iy - 1) * mesh_.nx;
      const int er = ex + iy * mesh_.nx;
      for (int i = 0; i < n; ++i) {
        const int a = el * nodes_per_element_ + (n - 1) * n + i;
        const int b = er * nodes_per_element_ + 0 * n + i;
        const FluxVector fnum = scheme_.surface.flux(q[a], q[b], Axis::y, g);
        out[a] = out[a] + (1.0 / my1) * (fnum - physical_flux(q[a], Axis::y, g));
        out[b] = out[b] - (1.0 / my0) * (fnum - physical_flux(q[b], Axis::y, g));
      }
    }
  }
}

std::vector<Vec4> Semidiscretization::volume_terms(const std::vector<Vec4>& u) const {
  const std::vector<PrimitiveState> q =
      to_primitive_checked(u, nodes_per_element_, gas_);
  std::vector<Vec4> out(u.size(), Vec4{0.0, 0.0, 0.0, 0.0});
  add_volume_terms(q, out);
  return out;
}

std::vector<Vec4> Semidiscretization::surface_terms(const std::vector<Vec4>& u) const {
  const std::vector<PrimitiveState> q =
      to_primitive_checked(u, nodes_per_element_, gas_);
  std::vector<Vec4> out(u.size(), Vec4{0.0, 0.0, 0.0, 0.0});
  add_surface_terms(q, out);
  return out;
}

std::vector<Vec4> Semidiscretization::rhs(const std::vector<Vec4>& u) const {
  const std::vector<PrimitiveState> q =
      to_primitive_checked(u, nodes_per_element_, gas_);
  std::vector<Vec4> acc(u.size(), Vec4{0.0, 0.0, 0.0, 0.0});
  add_volume_terms(q, acc);
  add_surface_terms(q, acc);
  std::vector<Vec4> out(u.size());
  for (size_t i = 0; i < u.size(); ++i) out[i] = -1.0 * acc[i];
  return out;
}

double Semidiscretization::stable_dt(const std::vector<Vec4>& u, double cfl) const {
  const std::vector<PrimitiveState> q =
      to_primitive_checked(u, nodes_per_element_, gas_);
  const double order = 2.0 * degree_ + 1.0;
  double inv_dt = 0.0;
  for (const PrimitiveState& qi : q) {
    const double c = sound_speed(qi, gas_);
    double s = (std::abs(qi.vx) + c) * order / mesh_.dx();
    if (mesh_.dimension == 2) s += (std::abs(qi.vy) + c) * order / mesh_.dy();
    inv_dt = std::max(inv_dt, s);
  }
  return cfl / inv_dt;
}

double Semidiscretization::entropy_rate(const std::vector<Vec4>& u,
                                        double* scale) const {
  const std::vector<Vec4> du = rhs(u);
  double rate = 0.0, sc = 0.0;
  for (int e = 0; e < mesh_.num_elements(); ++e) {
    for (int i = 0; i < nodes_per_element_; ++i) {
      const int idx = e * nodes_per_element_ + i;
      const Vec4 w = entropy_variables(cons_to_prim(u[idx], gas_), gas_);
      const double m = node_mass(i);
      rate += m * dot(w, du[idx]);
      const double nw = std::sqrt(dot(w, w));
      const double nd = std::sqrt(dot(du[idx], du[idx]));
      sc += m * nw * nd;
    }
  }
  if (scale) *scale = sc;
  return rate;
}

Vec4 Semidiscretization::conservation_rate(const std::vector<Vec4>& u) const {
  const std::vector<Vec4> du = rhs(u);
  Vec4 total{0.0, 0.0, 0.0, 0.0};
  for (int e = 0; e < mesh_.num_elements(); ++e)
    for (int i = 0; i < nodes_per_element_; ++i)
      total = total + node_mass(i) * du[e * nodes_per_element_ + i];
  return total;
}

std::vector<Vec4> fv_euler_step(const std::vector<Vec4>& row,
                                const SurfaceScheme& flux, double dt, double dx,
                                const GasModel& g,
                                const std::optional<Vec4>& ghost_left,
                                const std::optional<Vec4>& ghost_right) {
  const int n = static_cast<int>(row.size());
  std::vector<PrimitiveState> q(n);
  for (int i = 0; i < n; ++i) q[i] = cons_to_prim(row[i], g);
  const PrimitiveState ql =
      ghost_left ? cons_to_prim(*ghost_left, g) : q[n - 1];
  const PrimitiveState qr = ghost_right ? cons_to_prim(*ghost_right, g) : q[0];

  std::vector<FluxVector> f(n + 1);
  f[0] = flux.flux(ql, q[0], Axis::x, g);
  for (int i = 1; i < n; ++i) f[i] = flux.flux(q[i - 1], q[i], Axis::x, g);
  f[n] = flux.flux(q[n - 1], qr, Axis::x, g);

  std::vector<Vec4> out(n);
  const double r = dt / dx;
  for (int i = 0; i < n; ++i) out[i] = row[i] - r * (f[i + 1] - f[i]);
  return out;
}

RunResult run_simulation(const SimulationSetup& setup) {
  Semidiscretization disc(setup.mesh, setup.scheme.degree, setup.scheme, setup.gas);
  if (setup.mesh.boundary == BoundaryKind::WeakDirichlet) {
    assert(setup.exterior_left && setup.exterior_right);
    disc.set_exterior_states(*setup.exterior_left, *setup.exterior_right);
  }

  RunResult result;
  result.solution.mesh = setup.mesh;
  result.solution.degree = setup.scheme.degree;
  result.solution.u = disc.project(
      [&](double x, double y) { return setup.initial(x, y); });
  result.solution.time = 0.0;

  auto rhs = [&](const std::vector<Vec4>& v) { return disc.rhs(v); };

  double t = 0.0;
  long step = 0;
  const long max_steps = 200'000'000;
  const bool fixed = setup.scheme.policy.steps > 0;
  const double dt_fixed = fixed ? setup.t_final / setup.scheme.policy.steps : 0.0;

  auto record_crash = [&](int element, int node, const char* quantity) {
    result.crash = CrashInfo{step, t, element, node, quantity};
  };

  while (true) {
    if (fixed) {
      if (step >= setup.scheme.policy.steps) break;
    } else if (t >= setup.t_final * (1.0 - 1e-13)) {
      break;
    }
    if (step >= max_steps) {
      record_crash(0, 0, "stall");
      break;
    }
    double dt = dt_fixed;
    try {
      if (!fixed) {
        dt = disc.stable_dt(result.solution.u, setup.scheme.policy.cfl);
        if (t + dt > setup.t_final) dt = setup.t_final - t;
      }
      result.solution.u = ssprk3_step(result.solution.u, rhs, dt);
    } catch (const CrashSignal& c) {
      record_crash(c.element, c.node, c.quantity);
      break;
    } catch (const NonpositiveArgument&) {
      record_crash(0, 0, "p");
      break;
    } catch (const InadmissibleInput&) {
      record_crash(0, 0, "p");
      break;
    } catch (const NonpositiveDensity&) {
      record_crash(0, 0, "rho");
      break;
    }
    t += dt;
    ++step;
    result.solution.time = t;
    // post-step admissibility: tables print "*" for runs leaving the
    // invariant region
    for (int e = 0; e < setup.mesh.num_elements() && !result.crash; ++e) {
      for (int i = 0; i < disc.nodes_per_element(); ++i) {
        const Vec4& ui = result.solution.u[e * disc.nodes_per_element() + i];
        if (!std::isfinite(ui[0]) || !std::isfinite(ui[1]) ||
            !std::isfinite(ui[2]) || !std::isfinite(ui[3])) {
          record_crash(e, i, "finite");
          break;
        }
        if (!(ui[0] > 0.0)) {
          record_crash(e, i, "rho");
          break;
        }
        if (!(cons_to_prim(ui, setup.gas).p > 0.0)) {
          record_crash(e, i, "p");
          break;
        }
      }
    }
    if (result.crash) break;
  }
  return result;
}

}  // namespace eulerflux
