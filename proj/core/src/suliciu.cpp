#include "eulerflux/suliciu.hpp"

#include <cmath>

namespace eulerflux {

namespace {

struct Oriented {
  double rho, vn, vt, p;
};

Oriented orient(const PrimitiveState& q, Axis dir) {
  if (dir == Axis::x) return {q.rho, q.vx, q.vy, q.p};
  return {q.rho, q.vy, q.vx, q.p};
}

FluxVector place(double f_rho, double f_n, double f_t, double f_E, Axis dir) {
  if (dir == Axis::x) return {f_rho, f_n, f_t, f_E};
  return {f_rho, f_t, f_n, f_E};
}

struct Speeds {
  double cm_over_rhom;
  double cp_over_rhop;
};

Speeds relaxation_speeds(const Oriented& m, const Oriented& p, const GasModel& g) {
  const double am = std::sqrt(g.gamma * m.p / m.rho);
  const double ap = std::sqrt(g.gamma * p.p / p.rho);
  const double dv = m.vn - p.vn;
  const double k = 0.5 * (g.gamma + 1.0);
  Speeds s{};
  if (p.p >= m.p) {
    s.cm_over_rhom = am + k * std::max((p.p - m.p) / (p.rho * ap) + dv, 0.0);
    const double cm = m.rho * s.cm_over_rhom;
    s.cp_over_rhop = ap + k * std::max((m.p - p.p) / cm + dv, 0.0);
  } else {
    s.cp_over_rhop = ap + k * std::max((m.p - p.p) / (m.rho * am) + dv, 0.0);
    const double cp = p.rho * s.cp_over_rhop;
    s.cm_over_rhom = am + k * std::max((p.p - m.p) / cp + dv, 0.0);
  }
  return s;
}

SuliciuIntermediates intermediates(const Oriented& m, const Oriented& p,
                                   const GasModel& g) {
  if (!(m.rho > 0.0) || !(p.rho > 0.0) || !(m.p > 0.0) || !(p.p > 0.0))
    throw InadmissibleInput("suliciu flux requires positive density and pressure");
  const Speeds s = relaxation_speeds(m, p, g);
  const double cm = m.rho * s.cm_over_rhom;
  const double cp = p.rho * s.cp_over_rhop;
  const double csum = cm + cp;

  SuliciuIntermediates im{};
  im.c_minus = cm;
  im.c_plus = cp;
  im.p_star = (cp * m.p + cm * p.p - cm * cp * (p.vn - m.vn)) / csum;
  im.v_star = (cm * m.vn + cp * p.vn + m.p - p.p) / csum;
  const double inv_rho_sm = 1.0 / m.rho + (cp * (p.vn - m.vn) + m.p - p.p) / (cm * csum);
  const double inv_rho_sp = 1.0 / p.rho + (cm * (p.vn - m.vn) + p.p - m.p) / (cp * csum);
  im.rho_star_minus = 1.0 / inv_rho_sm;
  im.rho_star_plus = 1.0 / inv_rho_sp;
  const double eps_m = m.p / ((g.gamma - 1.0) * m.rho);
  const double eps_p = p.p / ((g.gamma - 1.0) * p.rho);
  im.eps_star_minus = eps_m + (im.p_star * im.p_star - m.p * m.p) / (2.0 * cm * cm);
  im.eps_star_plus = eps_p + (im.p_star * im.p_star - p.p * p.p) / (2.0 * cp * cp);
  return im;
}

FluxVector state_flux(double rho, double vn, double vt, double eps, double p, Axis dir) {
  const double f_rho = rho * vn;
  return place(f_rho, f_rho * vn + p, f_rho * vt,
               (0.5 * rho * (vn * vn + vt * vt) + rho * eps + p) * vn, dir);
}

}  // namespace

SuliciuIntermediates suliciu_intermediates(const PrimitiveState& qm,
                                           const PrimitiveState& qp, Axis dir,
                                           const GasModel& g) {
  return intermediates(orient(qm, dir), orient(qp, dir), g);
}

FluxVector suliciu_flux(const PrimitiveState& qm, const PrimitiveState& qp, Axis dir,
                        const GasModel& g) {
  if (qm.rho == qp.rho && qm.vx == qp.vx && qm.vy == qp.vy && qm.p == qp.p) {
    if (!(qm.rho > 0.0) || !(qm.p > 0.0))
      throw InadmissibleInput("suliciu flux requires positive density and pressure");
    return physical_flux(qm, dir, g);
  }
  const Oriented m = orient(qm, dir);
  const Oriented p = orient(qp, dir);
  const SuliciuIntermediates im = intermediates(m, p, g);
  const double eps_m = m.p / ((g.gamma - 1.0) * m.rho);
  const double eps_p = p.p / ((g.gamma - 1.0) * p.rho);

  if (0.0 <= m.vn - im.c_minus / m.rho)
    return state_flux(m.rho, m.vn, m.vt, eps_m, m.p, dir);
  if (0.0 <= im.v_star)
    return state_flux(im.rho_star_minus, im.v_star, m.vt, im.eps_star_minus,
                      im.p_star, dir);
  if (0.0 <= p.vn + im.c_plus / p.rho)
    return state_flux(im.rho_star_plus, im.v_star, p.vt, im.eps_star_plus,
                      im.p_star, dir);
  return state_flux(p.rho, p.vn, p.vt, eps_p, p.p, dir);
}

double suliciu_cfl(const PrimitiveState& qm, const PrimitiveState& qp, Axis dir,
                   const GasModel& g) {
  const Oriented m = orient(qm, dir);
  const Oriented p = orient(qp, dir);
  const SuliciuIntermediates im = intermediates(m, p, g);
  return std::max(std::abs(m.vn - im.c_minus / m.rho),
                  std::abs(p.vn + im.c_plus / p.rho));
}

}  // namespace eulerflux
