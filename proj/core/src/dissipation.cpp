#include "eulerflux/dissipation.hpp"

#include <cmath>

#include "eulerflux/means.hpp"

namespace eulerflux {

std::string_view dissipation_name(DissipationKind kind) {
  switch (kind) {
    case DissipationKind::None: return "none";
    case DissipationKind::LLF: return "llf";
    case DissipationKind::ScalarSD: return "sd";
    case DissipationKind::MatrixMD: return "md";
    case DissipationKind::HybridHD: return "hd";
  }
  return "?";
}

std::optional<DissipationKind> dissipation_from_name(std::string_view name) {
  for (DissipationKind kind : all_dissipation_kinds())
    if (dissipation_name(kind) == name) return kind;
  return std::nullopt;
}

const std::vector<DissipationKind>& all_dissipation_kinds() {
  static const std::vector<DissipationKind> kinds{
      DissipationKind::None, DissipationKind::LLF, DissipationKind::ScalarSD,
      DissipationKind::MatrixMD, DissipationKind::HybridHD};
  return kinds;
}

Vec4 mat_vec(const Mat4& m, const Vec4& v) {
  Vec4 r{};
  for (int i = 0; i < 4; ++i)
    r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2] + m[i][3] * v[3];
  return r;
}

Mat4 entropy_jacobian(const PrimitiveState& q, const GasModel& g) {
  const double a2 = g.gamma * q.p / q.rho;
  const double v2 = q.vx * q.vx + q.vy * q.vy;
  const double E = 0.5 * q.rho * v2 + q.p / (g.gamma - 1.0);
  const double h = a2 / (g.gamma - 1.0) + 0.5 * v2;
  Mat4 m{};
  m[0] = {q.rho, q.rho * q.vx, q.rho * q.vy, E};
  m[1] = {q.rho * q.vx, q.rho * q.vx * q.vx + q.p, q.rho * q.vx * q.vy,
          (E + q.p) * q.vx};
  m[2] = {q.rho * q.vy, q.rho * q.vx * q.vy, q.rho * q.vy * q.vy + q.p,
          (E + q.p) * q.vy};
  m[3] = {E, (E + q.p) * q.vx, (E + q.p) * q.vy,
          q.rho * h * h - a2 * q.p / (g.gamma - 1.0)};
  return m;
}

ScaledEigensystem barth_eigensystem(const PrimitiveState& q, Axis dir,
                                    const GasModel& g) {
  const double a = sound_speed(q, g);
  const double v2 = q.vx * q.vx + q.vy * q.vy;
  const double h = a * a / (g.gamma - 1.0) + 0.5 * v2;
  const double vn = normal_velocity(q, dir);
  const double s_ac = std::sqrt(0.5 * q.rho / g.gamma);   // acoustic columns
  const double s_en = std::sqrt(q.rho * (g.gamma - 1.0) / g.gamma);
  const double s_sh = std::sqrt(q.p);                     // shear column

  const double nx = dir == Axis::x ? 1.0 : 0.0;
  const double ny = dir == Axis::x ? 0.0 : 1.0;

  ScaledEigensystem sys{};
  sys.lambda = {vn - a, vn, vn, vn + a};
  // column 0: acoustic (vn - a)
  sys.R[0][0] = s_ac;
  sys.R[1][0] = s_ac * (q.vx - a * nx);
  sys.R[2][0] = s_ac * (q.vy - a * ny);
  sys.R[3][0] = s_ac * (h - a * vn);
  // column 1: entropy wave
  sys.R[0][1] = s_en;
  sys.R[1][1] = s_en * q.vx;
  sys.R[2][1] = s_en * q.vy;
  sys.R[3][1] = s_en * 0.5 * v2;
  // column 2: shear wave
  sys.R[0][2] = 0.0;
  sys.R[1][2] = s_sh * ny;
  sys.R[2][2] = s_sh * nx;
  sys.R[3][2] = s_sh * (dir == Axis::x ? q.vy : q.vx);
  // column 3: acoustic (vn + a)
  sys.R[0][3] = s_ac;
  sys.R[1][3] = s_ac * (q.vx + a * nx);
  sys.R[2][3] = s_ac * (q.vy + a * ny);
  sys.R[3][3] = s_ac * (h + a * vn);
  return sys;
}

PrimitiveState dissipation_average_state(const PrimitiveState& qm,
                                         const PrimitiveState& qp, const GasModel&) {
  return {log_mean(qm.rho, qp.rho), arith_mean(qm.vx, qp.vx),
          arith_mean(qm.vy, qp.vy), arith_mean(qm.p, qp.p)};
}

FluxVector llf_flux(const PrimitiveState& qm, const PrimitiveState& qp, Axis dir,
                    const GasModel& g) {
  const FluxVector fm = physical_flux(qm, dir, g);
  const FluxVector fp = physical_flux(qp, dir, g);
  const double lam = max_wavespeed(qm, qp, dir, g);
  const Vec4 ju = prim_to_cons(qp, g) - prim_to_cons(qm, g);
  return 0.5 * (fm + fp) - (0.5 * lam) * ju;
}

namespace {

Vec4 md_term(const PrimitiveState& hat, Axis dir, const GasModel& g, const Vec4& jw) {
  const ScaledEigensystem sys = barth_eigensystem(hat, dir, g);
  // R |Lambda| R^T jw
  Vec4 rtjw{};
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i) rtjw[k] += sys.R[i][k] * jw[i];
  for (int k = 0; k < 4; ++k) rtjw[k] *= std::abs(sys.lambda[k]);
  Vec4 r{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) r[i] += sys.R[i][k] * rtjw[k];
  return r;
}

}  // namespace

FluxVector dissipative_flux(const VolumeFluxSpec& base, DissipationKind diss,
                            const PrimitiveState& qm, const PrimitiveState& qp,
                            Axis dir, const GasModel& g) {
  FluxVector f = volume_flux(base, qm, qp, dir, g);
  if (diss == DissipationKind::None) return f;

  if (diss == DissipationKind::LLF) {
    const double lam = max_wavespeed(qm, qp, dir, g);
    const Vec4 ju = prim_to_cons(qp, g) - prim_to_cons(qm, g);
    return f - (0.5 * lam) * ju;
  }

  const Vec4 jw = entropy_variables(qp, g) - entropy_variables(qm, g);
  const PrimitiveState hat = dissipation_average_state(qm, qp, g);

  if (diss == DissipationKind::ScalarSD || diss == DissipationKind::HybridHD) {
    const double lam_hat = std::abs(normal_velocity(hat, dir)) + sound_speed(hat, g);
    const Vec4 sd = (0.5 * lam_hat) * mat_vec(entropy_jacobian(hat, g), jw);
    if (diss == DissipationKind::ScalarSD) return f - sd;
    const double xi = std::sqrt(std::abs((qp.p - qm.p) / (qp.p + qm.p)));
    const Vec4 md = 0.5 * md_term(hat, dir, g, jw);
    return f - (xi * sd + (1.0 - xi) * md);
  }

  // MatrixMD
  return f - 0.5 * md_term(hat, dir, g, jw);
}

}  // namespace eulerflux
