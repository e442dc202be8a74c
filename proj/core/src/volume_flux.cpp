#include "eulerflux/volume_flux.hpp"

#include <cmath>

#include "eulerflux/means.hpp"

namespace eulerflux {

namespace {

// All fluxes are written for the normal direction; for Axis::y the roles of
// vx/vy and of the two momentum components swap, which reproduces the
// y-direction formulas verbatim.
struct Oriented {
  double rho;
  double vn;
  double vt;
  double p;
};

// log_mean evaluated in extended precision, same series switch as the
// double version
long double log_mean_ld(long double lo, long double hi) {
  const long double z = lo / hi;
  const long double f = (z - 1.0L) / (z + 1.0L);
  const long double u = f * f;
  if (u < 1e-4L) {
    const long double series =
        1.0L + u * (1.0L / 3.0L + u * (1.0L / 5.0L + u * (1.0L / 7.0L)));
    return 0.5L * (lo + hi) / series;
  }
  return (hi - lo) / (std::log(hi) - std::log(lo));
}

Oriented orient(const PrimitiveState& q, Axis dir) {
  if (dir == Axis::x) return {q.rho, q.vx, q.vy, q.p};
  return {q.rho, q.vy, q.vx, q.p};
}

FluxVector place(double f_rho, double f_n, double f_t, double f_E, Axis dir) {
  if (dir == Axis::x) return {f_rho, f_n, f_t, f_E};
  return {f_rho, f_t, f_n, f_E};
}

struct Pairs {
  Oriented m, p;
  double a_rho, a_vn, a_vt;    // arithmetic means
  double a_vn2, a_vt2;         // means of squared velocities
  double l_rho;                // logarithmic mean of rho
};

Pairs make_pairs(const Oriented& m, const Oriented& p) {
  Pairs r{m,
          p,
          arith_mean(m.rho, p.rho),
          arith_mean(m.vn, p.vn),
          arith_mean(m.vt, p.vt),
          arith_mean(m.vn * m.vn, p.vn * p.vn),
          arith_mean(m.vt * m.vt, p.vt * p.vt),
          log_mean(m.rho, p.rho)};
  return r;
}

FluxVector flux_ir(const Oriented& m, const Oriented& p, Axis dir, const GasModel& g) {
  const double z1m = std::sqrt(m.rho / m.p), z1p = std::sqrt(p.rho / p.p);
  const double z2m = z1m * m.vn, z2p = z1p * p.vn;
  const double z3m = z1m * m.vt, z3p = z1p * p.vt;
  const double z5m = std::sqrt(m.rho * m.p), z5p = std::sqrt(p.rho * p.p);
  const double a1 = arith_mean(z1m, z1p);
  const double a2 = arith_mean(z2m, z2p);
  const double a3 = arith_mean(z3m, z3p);
  const double a5 = arith_mean(z5m, z5p);
  const double l1 = log_mean(z1m, z1p);
  const double l5 = log_mean(z5m, z5p);
  const double f_rho = a2 * l5;
  const double f_n = (a2 / a1) * f_rho + a5 / a1;
  const double f_t = (a3 / a1) * f_rho;
  const double f_E = 0.5 * (g.gamma + 1.0) / (g.gamma - 1.0) * f_rho / (a1 * l1) +
                     0.5 * (a2 / a1) * f_n + 0.5 * (a3 / a1) * f_t;
  return place(f_rho, f_n, f_t, f_E, dir);
}

FluxVector flux_ch1(const Pairs& q, Axis dir, const GasModel& g) {
  const double bm = 0.5 * q.m.rho / q.m.p, bp = 0.5 * q.p.rho / q.p.p;
  const double a_b = arith_mean(bm, bp);
  const double l_b = log_mean(bm, bp);
  const double f_rho = q.l_rho * q.a_vn;
  const double f_n = q.a_vn * f_rho + 0.5 * q.a_rho / a_b;
  const double f_t = q.a_vt * f_rho;
  const double f_E = (0.5 / ((g.gamma - 1.0) * l_b) - 0.5 * (q.a_vn2 + q.a_vt2)) * f_rho +
                     q.a_vn * f_n + q.a_vt * f_t;
  return place(f_rho, f_n, f_t, f_E, dir);
}

FluxVector flux_ch2(const Pairs& q, Axis dir, const GasModel& g) {
  const double bm = 0.5 * q.m.rho / q.m.p, bp = 0.5 * q.p.rho / q.p.p;
  const double a_b = arith_mean(bm, bp);
  const double l_b = log_mean(bm, bp);
  const double a_bvn = arith_mean(bm * q.m.vn, bp * q.p.vn);
  const double a_bvt = arith_mean(bm * q.m.vt, bp * q.p.vt);
  const double f_rho = q.l_rho * q.a_vn;
  const double f_n = (a_bvn + a_b * q.a_vn) / (2.0 * a_b) * f_rho + 0.5 * q.a_rho / a_b;
  const double f_t = (a_bvt + a_b * q.a_vt) / (2.0 * a_b) * f_rho;
  // Second splitting of the squared-velocity jumps: the energy flux carries
  // squares of the velocity means, as for the second rho,v,RT variant.
  const double f_E = (0.5 / ((g.gamma - 1.0) * l_b) -
                      0.5 * (q.a_vn * q.a_vn + q.a_vt * q.a_vt)) *
                         f_rho +
                     q.a_vn * f_n + q.a_vt * f_t;
  return place(f_rho, f_n, f_t, f_E, dir);
}

FluxVector flux_rho_v_invp(const Pairs& q, Axis dir, const GasModel& g) {
  const double ipm = 1.0 / q.m.p, ipp = 1.0 / q.p.p;
  const double a_ip = arith_mean(ipm, ipp);
  const double l_ip = log_mean(ipm, ipp);
  const double a_rho_p = arith_mean(q.m.rho * ipm, q.p.rho * ipp);
  const double denom = g.gamma / q.l_rho - a_ip / (l_ip * q.a_rho);
  const double f_rho = (g.gamma - 1.0) / denom * q.a_vn;
  const double p_num = q.a_rho / a_rho_p;
  const double f_n = q.a_vn * f_rho + p_num;
  const double f_t = q.a_vt * f_rho;
  const double f_E = (1.0 / ((g.gamma - 1.0) * l_ip * q.a_rho) +
                      q.a_vn * q.a_vn + q.a_vt * q.a_vt - 0.5 * (q.a_vn2 + q.a_vt2)) *
                         f_rho +
                     p_num * q.a_vn;
  return place(f_rho, f_n, f_t, f_E, dir);
}

FluxVector flux_rho_v_p(const Pairs& q, Axis dir, const GasModel& g) {
  const double a_ip = arith_mean(1.0 / q.m.p, 1.0 / q.p.p);
  const double l_p = log_mean(q.m.p, q.p.p);
  const double ge2 = q.m.p * q.p.p;  // geo_mean(p)^2
  const double a_rho_p = arith_mean(q.m.rho / q.m.p, q.p.rho / q.p.p);
  const double denom = g.gamma / q.l_rho - a_ip * ge2 / (q.a_rho * l_p);
  const double f_rho = (g.gamma - 1.0) / denom * q.a_vn;
  const double p_num = q.a_rho / a_rho_p;
  const double f_n = q.a_vn * f_rho + p_num;
  const double f_t = q.a_vt * f_rho;
  const double f_E = (ge2 / ((g.gamma - 1.0) * q.a_rho * l_p) +
                      q.a_vn * q.a_vn + q.a_vt * q.a_vt - 0.5 * (q.a_vn2 + q.a_vt2)) *
                         f_rho +
                     p_num * q.a_vn;
  return place(f_rho, f_n, f_t, f_E, dir);
}

FluxVector flux_rho_v_t1(const Pairs& q, Axis dir, const GasModel& g) {
  const double rtm = q.m.p / q.m.rho, rtp = q.p.p / q.p.rho;
  const double a_irt = arith_mean(1.0 / rtm, 1.0 / rtp);
  const double l_rt = log_mean(rtm, rtp);
  const double ge2 = rtm * rtp;  // geo_mean(RT)^2
  const double f_rho = q.l_rho * q.a_vn;
  const double f_n = q.a_vn * f_rho + q.a_rho / a_irt;
  const double f_t = q.a_vt * f_rho;
  const double f_E =
      (ge2 / ((g.gamma - 1.0) * l_rt) - 0.5 * (q.a_vn2 + q.a_vt2)) * f_rho +
      q.a_vn * f_n + q.a_vt * f_t;
  return place(f_rho, f_n, f_t, f_E, dir);
}

FluxVector flux_rho_v_t2(const Pairs& q, Axis dir, const GasModel& g) {
  const double rtm = q.m.p / q.m.rho, rtp = q.p.p / q.p.rho;
  const double irtm = 1.0 / rtm, irtp = 1.0 / rtp;
  const double a_irt = arith_mean(irtm, irtp);
  const double l_rt = log_mean(rtm, rtp);
  const double ge2 = rtm * rtp;
  const double a_vn_rt = arith_mean(q.m.vn * irtm, q.p.vn * irtp);
  const double a_vt_rt = arith_mean(q.m.vt * irtm, q.p.vt * irtp);
  const double f_rho = q.l_rho * q.a_vn;
  const double f_n =
      (a_vn_rt + a_irt * q.a_vn) / (2.0 * a_irt) * f_rho + q.a_rho / a_irt;
  const double f_t = (a_vt_rt + a_irt * q.a_vt) / (2.0 * a_irt) * f_rho;
  // Second splitting of the squared-velocity jumps: squares of the velocity
  // means, not means of the squares.
  const double f_E = (ge2 / ((g.gamma - 1.0) * l_rt) -
                      0.5 * (q.a_vn * q.a_vn + q.a_vt * q.a_vt)) *
                         f_rho +
                     q.a_vn * f_n + q.a_vt * f_t;
  return place(f_rho, f_n, f_t, f_E, dir);
}

FluxVector flux_power_r(const Pairs& q, Axis dir, const GasModel& g, double r) {
  const double chim = std::pow(q.m.rho / q.m.p, 1.0 / r);
  const double chip = std::pow(q.p.rho / q.p.p, 1.0 / r);
  const double l_chi = log_mean(chim, chip);
  const double pow_rm1 = power_mean_pow_rm1(chim, chip, r);
  const double a_rho_p = arith_mean(q.m.rho / q.m.p, q.p.rho / q.p.p);
  const double f_rho = q.l_rho * q.a_vn;
  const double f_n = q.a_vn * f_rho + q.a_rho / a_rho_p;
  const double f_t = q.a_vt * f_rho;
  const double f_E =
      (1.0 / ((g.gamma - 1.0) * pow_rm1 * l_chi) - 0.5 * (q.a_vn2 + q.a_vt2)) * f_rho +
      q.a_vn * f_n + q.a_vt * f_t;
  return place(f_rho, f_n, f_t, f_E, dir);
}

FluxVector flux_exp_chi(const Pairs& q, Axis dir, const GasModel& g) {
  const double chim = std::log(q.m.rho / q.m.p);
  const double chip = std::log(q.p.rho / q.p.p);
  const double exp_mean_chi = exp_mean_exp(chim, chip);
  const double a_rho_p = arith_mean(q.m.rho / q.m.p, q.p.rho / q.p.p);
  const double f_rho = q.l_rho * q.a_vn;
  const double f_n = q.a_vn * f_rho + q.a_rho / a_rho_p;
  const double f_t = q.a_vt * f_rho;
  const double f_E =
      (1.0 / ((g.gamma - 1.0) * exp_mean_chi) - 0.5 * (q.a_vn2 + q.a_vt2)) * f_rho +
      q.a_vn * f_n + q.a_vt * f_t;
  return place(f_rho, f_n, f_t, f_E, dir);
}

FluxVector flux_reversed_t(const Pairs& q, Axis dir, const GasModel& g) {
  // Energy flux from <w> . f - <psi> of the reversed system, regrouped with
  // the exact identities {a}{b} = {ab} - jump(a)jump(b)/4 and
  // {RT}^2 - jump(RT)^2/4 = RT- RT+ so that the consistent-with-zero part
  // cancels at equal states. The remaining combination still cancels terms
  // several orders of magnitude above the result for large temperature
  // ratios, so everything feeding it is evaluated in extended precision.
  using ld = long double;
  const ld rho_m = q.m.rho, rho_p = q.p.rho;
  const ld rtm = (ld)q.m.p / rho_m, rtp = (ld)q.p.p / rho_p;
  const auto [rt_lo, rt_hi] = std::minmax(rtm, rtp);
  const ld l_rt = log_mean_ld(rt_lo, rt_hi);
  const ld prtm = rho_m * rtm, prtp = rho_p * rtp;
  const ld a_prt = 0.5L * (prtm + prtp);
  const ld a_vn = q.a_vn, a_vt = q.a_vt;
  const auto [rho_lo, rho_hi] = std::minmax(rho_m, rho_p);
  const ld j_lrho = std::log(rho_hi) - std::log(rho_lo);
  const ld l_rho = log_mean_ld(rho_lo, rho_hi);
  const ld f_rho = l_rho * a_vn;
  const ld j_rt = rtp - rtm;
  // j_lrho l_rho - j_rho is the logarithmic chain-rule residual; keeping the
  // pair factored avoids amplifying the rounding of its huge cofactors
  const ld sign_rho = rho_p >= rho_m ? 1.0L : -1.0L;
  const ld chain_res = sign_rho * (j_lrho * l_rho - (rho_hi - rho_lo));
  const ld bracket = a_vn * a_vn + a_vt * a_vt - 0.5L * ((ld)q.a_vn2 + q.a_vt2) +
                     rt_lo * rt_hi / (((ld)g.gamma - 1.0L) * l_rt);
  const ld f_E = bracket * f_rho + a_prt * a_vn -
                 0.25L * (prtp - prtm) * ((ld)q.p.vn - q.m.vn) +
                 0.25L * j_rt * a_vn * chain_res;
  const double f_n = static_cast<double>(a_vn * f_rho + a_prt);
  const double f_t = q.a_vt * static_cast<double>(f_rho);
  return place(static_cast<double>(f_rho), f_n, f_t, static_cast<double>(f_E), dir);
}

FluxVector flux_central(const PrimitiveState& qm, const PrimitiveState& qp, Axis dir,
                        const GasModel& g) {
  const FluxVector fm = physical_flux(qm, dir, g);
  const FluxVector fp = physical_flux(qp, dir, g);
  return 0.5 * (fm + fp);
}

FluxVector flux_ducros(const Pairs& q, Axis dir, const GasModel& g) {
  const double a_p = arith_mean(q.m.p, q.p.p);
  const double a_rvn = arith_mean(q.m.rho * q.m.vn, q.p.rho * q.p.vn);
  const double a_rvt = arith_mean(q.m.rho * q.m.vt, q.p.rho * q.p.vt);
  const double Em = 0.5 * q.m.rho * (q.m.vn * q.m.vn + q.m.vt * q.m.vt) +
                    q.m.p / (g.gamma - 1.0);
  const double Ep = 0.5 * q.p.rho * (q.p.vn * q.p.vn + q.p.vt * q.p.vt) +
                    q.p.p / (g.gamma - 1.0);
  const double a_E = arith_mean(Em, Ep);
  return place(q.a_rho * q.a_vn, a_rvn * q.a_vn + a_p, a_rvt * q.a_vn,
               (a_E + a_p) * q.a_vn, dir);
}

FluxVector flux_kg(const Pairs& q, Axis dir, const GasModel& g) {
  const double a_p = arith_mean(q.m.p, q.p.p);
  const double em = 0.5 * (q.m.vn * q.m.vn + q.m.vt * q.m.vt) +
                    q.m.p / ((g.gamma - 1.0) * q.m.rho);
  const double ep = 0.5 * (q.p.vn * q.p.vn + q.p.vt * q.p.vt) +
                    q.p.p / ((g.gamma - 1.0) * q.p.rho);
  const double a_e = arith_mean(em, ep);
  const double f_rho = q.a_rho * q.a_vn;
  return place(f_rho, f_rho * q.a_vn + a_p, f_rho * q.a_vt,
               f_rho * a_e + a_p * q.a_vn, dir);
}

FluxVector flux_pirozzoli(const Pairs& q, Axis dir, const GasModel& g) {
  const double a_p = arith_mean(q.m.p, q.p.p);
  const double hm = 0.5 * (q.m.vn * q.m.vn + q.m.vt * q.m.vt) +
                    g.gamma * q.m.p / ((g.gamma - 1.0) * q.m.rho);
  const double hp = 0.5 * (q.p.vn * q.p.vn + q.p.vt * q.p.vt) +
                    g.gamma * q.p.p / ((g.gamma - 1.0) * q.p.rho);
  const double a_h = arith_mean(hm, hp);
  const double f_rho = q.a_rho * q.a_vn;
  return place(f_rho, f_rho * q.a_vn + a_p, f_rho * q.a_vt, f_rho * a_h, dir);
}

FluxVector flux_morinishi(const Pairs& q, Axis dir, const GasModel& g) {
  const double a_p = arith_mean(q.m.p, q.p.p);
  const double a_rvn = arith_mean(q.m.rho * q.m.vn, q.p.rho * q.p.vn);
  // internal-energy advective part plus skew-symmetric kinetic transport
  const double gepm = g.gamma / (g.gamma - 1.0) * q.m.p * q.m.vn;
  const double gepp = g.gamma / (g.gamma - 1.0) * q.p.p * q.p.vn;
  const double a_gep = arith_mean(gepm, gepp);
  const double a_rvn_vn2 = arith_mean(q.m.rho * q.m.vn * q.m.vn * q.m.vn,
                                      q.p.rho * q.p.vn * q.p.vn * q.p.vn);
  const double a_rvn_vt2 = arith_mean(q.m.rho * q.m.vn * q.m.vt * q.m.vt,
                                      q.p.rho * q.p.vn * q.p.vt * q.p.vt);
  const double f_E = a_gep + a_rvn * q.a_vn * q.a_vn + a_rvn * q.a_vt * q.a_vt -
                     0.5 * (a_rvn_vn2 + a_rvn_vt2);
  return place(a_rvn, a_rvn * q.a_vn + a_p, a_rvn * q.a_vt, f_E, dir);
}

bool same_state(const PrimitiveState& a, const PrimitiveState& b) {
  return a.rho == b.rho && a.vx == b.vx && a.vy == b.vy && a.p == b.p;
}

}  // namespace

bool is_entropy_conservative(VolumeFluxKind kind) {
  switch (kind) {
    case VolumeFluxKind::IR:
    case VolumeFluxKind::Ch1:
    case VolumeFluxKind::Ch2:
    case VolumeFluxKind::RhoVInvP:
    case VolumeFluxKind::RhoVP:
    case VolumeFluxKind::RhoVT1:
    case VolumeFluxKind::RhoVT2:
    case VolumeFluxKind::PowerR:
    case VolumeFluxKind::ExpChi:
    case VolumeFluxKind::ReversedT:
      return true;
    default:
      return false;
  }
}

std::string_view volume_flux_name(VolumeFluxKind kind) {
  switch (kind) {
    case VolumeFluxKind::IR: return "ir";
    case VolumeFluxKind::Ch1: return "ch1";
    case VolumeFluxKind::Ch2: return "ch2";
    case VolumeFluxKind::RhoVInvP: return "rho-v-invp";
    case VolumeFluxKind::RhoVP: return "rho-v-p";
    case VolumeFluxKind::RhoVT1: return "rho-v-t1";
    case VolumeFluxKind::RhoVT2: return "rho-v-t2";
    case VolumeFluxKind::PowerR: return "power-r";
    case VolumeFluxKind::ExpChi: return "exp-chi";
    case VolumeFluxKind::ReversedT: return "reversed-t";
    case VolumeFluxKind::Central: return "central";
    case VolumeFluxKind::Morinishi: return "morinishi";
    case VolumeFluxKind::Ducros: return "ducros";
    case VolumeFluxKind::KG: return "kg";
    case VolumeFluxKind::Pirozzoli: return "pirozzoli";
  }
  return "?";
}

std::optional<VolumeFluxKind> volume_flux_from_name(std::string_view name) {
  for (VolumeFluxKind kind : all_volume_flux_kinds())
    if (volume_flux_name(kind) == name) return kind;
  return std::nullopt;
}

const std::vector<VolumeFluxKind>& ec_volume_flux_kinds() {
  static const std::vector<VolumeFluxKind> kinds{
      VolumeFluxKind::IR,       VolumeFluxKind::Ch1,      VolumeFluxKind::Ch2,
      VolumeFluxKind::RhoVInvP, VolumeFluxKind::RhoVP,    VolumeFluxKind::RhoVT1,
      VolumeFluxKind::RhoVT2,   VolumeFluxKind::PowerR,   VolumeFluxKind::ExpChi,
      VolumeFluxKind::ReversedT};
  return kinds;
}

const std::vector<VolumeFluxKind>& split_volume_flux_kinds() {
  static const std::vector<VolumeFluxKind> kinds{
      VolumeFluxKind::Central, VolumeFluxKind::Morinishi, VolumeFluxKind::Ducros,
      VolumeFluxKind::KG, VolumeFluxKind::Pirozzoli};
  return kinds;
}

const std::vector<VolumeFluxKind>& all_volume_flux_kinds() {
  static const std::vector<VolumeFluxKind> kinds = [] {
    std::vector<VolumeFluxKind> v = ec_volume_flux_kinds();
    for (VolumeFluxKind k : split_volume_flux_kinds()) v.push_back(k);
    return v;
  }();
  return kinds;
}

FluxVector volume_flux(const VolumeFluxSpec& spec, const PrimitiveState& qm,
                       const PrimitiveState& qp, Axis dir, const GasModel& g) {
  // Two-point fluxes are consistent; the diagonal pairs of flux differencing
  // reduce to the physical flux.
  if (same_state(qm, qp)) return physical_flux(qm, dir, g);
  if (spec.kind == VolumeFluxKind::Central) return flux_central(qm, qp, dir, g);

  const Oriented om = orient(qm, dir);
  const Oriented op = orient(qp, dir);
  if (spec.kind == VolumeFluxKind::IR) return flux_ir(om, op, dir, g);

  const Pairs q = make_pairs(om, op);
  switch (spec.kind) {
    case VolumeFluxKind::Ch1: return flux_ch1(q, dir, g);
    case VolumeFluxKind::Ch2: return flux_ch2(q, dir, g);
    case VolumeFluxKind::RhoVInvP: return flux_rho_v_invp(q, dir, g);
    case VolumeFluxKind::RhoVP: return flux_rho_v_p(q, dir, g);
    case VolumeFluxKind::RhoVT1: return flux_rho_v_t1(q, dir, g);
    case VolumeFluxKind::RhoVT2: return flux_rho_v_t2(q, dir, g);
    case VolumeFluxKind::PowerR: return flux_power_r(q, dir, g, spec.power_r);
    case VolumeFluxKind::ExpChi: return flux_exp_chi(q, dir, g);
    case VolumeFluxKind::ReversedT: return flux_reversed_t(q, dir, g);
    case VolumeFluxKind::Morinishi: return flux_morinishi(q, dir, g);
    case VolumeFluxKind::Ducros: return flux_ducros(q, dir, g);
    case VolumeFluxKind::KG: return flux_kg(q, dir, g);
    case VolumeFluxKind::Pirozzoli: return flux_pirozzoli(q, dir, g);
    default: break;
  }
  throw std::logic_error("unhandled volume flux kind");
}

double ec_defect(const FluxVector& f, const PrimitiveState& qm,
                 const PrimitiveState& qp, Axis dir, const GasModel& g) {
  const Vec4 wm = entropy_variables(qm, g);
  const Vec4 wp = entropy_variables(qp, g);
  const FluxPotential psim = flux_potential(qm);
  const FluxPotential psip = flux_potential(qp);
  const double jpsi =
      dir == Axis::x ? psip.psi_x - psim.psi_x : psip.psi_y - psim.psi_y;
  return dot(wp - wm, f) - jpsi;
}

double kep_pressure(const VolumeFluxSpec& spec, const PrimitiveState& qm,
                    const PrimitiveState& qp, Axis dir, const GasModel& g) {
  const FluxVector f = volume_flux(spec, qm, qp, dir, g);
  const double a_vn = dir == Axis::x ? arith_mean(qm.vx, qp.vx)
                                     : arith_mean(qm.vy, qp.vy);
  const double f_n = dir == Axis::x ? f[1] : f[2];
  return f_n - a_vn * f[0];
}

}  // namespace eulerflux
