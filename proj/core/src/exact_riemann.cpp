#include "eulerflux/exact_riemann.hpp"

#include <cmath>

namespace eulerflux {

namespace {

struct Side {
  double rho, v, p, c;
};

// f_K(p) and its derivative for one side of the pressure equation.
double side_function(double p, const Side& s, double gamma) {
  if (p > s.p) {
    const double A = 2.0 / ((gamma + 1.0) * s.rho);
    const double B = (gamma - 1.0) / (gamma + 1.0) * s.p;
    return (p - s.p) * std::sqrt(A / (p + B));
  }
  return 2.0 * s.c / (gamma - 1.0) *
         (std::pow(p / s.p, (gamma - 1.0) / (2.0 * gamma)) - 1.0);
}

double side_derivative(double p, const Side& s, double gamma) {
  if (p > s.p) {
    const double A = 2.0 / ((gamma + 1.0) * s.rho);
    const double B = (gamma - 1.0) / (gamma + 1.0) * s.p;
    return std::sqrt(A / (B + p)) * (1.0 - 0.5 * (p - s.p) / (B + p));
  }
  return 1.0 / (s.rho * s.c) * std::pow(p / s.p, -(gamma + 1.0) / (2.0 * gamma));
}

double pressure_function(double p, const Side& l, const Side& r, double dv,
                         double gamma) {
  return side_function(p, l, gamma) + side_function(p, r, gamma) + dv;
}

double solve_star_pressure(const Side& l, const Side& r, double dv, double gamma) {
  // two-rarefaction start
  const double z = (gamma - 1.0) / (2.0 * gamma);
  double p = std::pow((l.c + r.c - 0.5 * (gamma - 1.0) * dv) /
                          (l.c / std::pow(l.p, z) + r.c / std::pow(r.p, z)),
                      1.0 / z);
  if (!(p > 0.0) || !std::isfinite(p)) p = 0.5 * (l.p + r.p);

  for (int it = 0; it < 100; ++it) {
    const double f = pressure_function(p, l, r, dv, gamma);
    const double df = side_derivative(p, l, gamma) + side_derivative(p, r, gamma);
    double dp = f / df;
    double pn = p - dp;
    if (!(pn > 0.0)) pn = 0.5 * p;
    if (std::abs(pn - p) <= 1e-12 * pn) return pn;
    p = pn;
  }

  // bisection fallback
  double lo = 1e-300;
  double hi = std::max(l.p, r.p);
  while (pressure_function(hi, l, r, dv, gamma) < 0.0) hi *= 2.0;
  for (int it = 0; it < 2000; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (pressure_function(mid, l, r, dv, gamma) > 0.0)
      hi = mid;
    else
      lo = mid;
    if (hi - lo <= 1e-14 * hi) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

RiemannFan exact_riemann(const PrimitiveState& left, const PrimitiveState& right,
                         const GasModel& g) {
  RiemannFan fan{};
  fan.left = left;
  fan.right = right;
  fan.gas = g;

  const double gamma = g.gamma;
  const Side l{left.rho, left.vx, left.p, sound_speed(left, g)};
  const Side r{right.rho, right.vx, right.p, sound_speed(right, g)};
  const double dv = r.v - l.v;

  if (2.0 * (l.c + r.c) / (gamma - 1.0) <= dv) {
    // double rarefaction opens a vacuum region around the contact
    fan.vacuum = true;
    fan.p_star = 0.0;
    fan.left_wave = fan.right_wave = WaveType::Rarefaction;
    fan.left_speed_head = l.v - l.c;
    fan.left_speed_tail = l.v + 2.0 * l.c / (gamma - 1.0);
    fan.right_speed_tail = r.v - 2.0 * r.c / (gamma - 1.0);
    fan.right_speed_head = r.v + r.c;
    fan.v_star = 0.5 * (fan.left_speed_tail + fan.right_speed_tail);
    return fan;
  }

  const double ps = solve_star_pressure(l, r, dv, gamma);
  fan.p_star = ps;
  fan.v_star = 0.5 * (l.v + r.v) +
               0.5 * (side_function(ps, r, gamma) - side_function(ps, l, gamma));

  const double gm1 = gamma - 1.0, gp1 = gamma + 1.0;
  if (ps > l.p) {
    fan.left_wave = WaveType::Shock;
    fan.rho_star_left = l.rho * (ps / l.p + gm1 / gp1) / (gm1 / gp1 * ps / l.p + 1.0);
    fan.left_speed_head = fan.left_speed_tail =
        l.v - l.c * std::sqrt(gp1 / (2.0 * gamma) * ps / l.p + gm1 / (2.0 * gamma));
  } else {
    fan.left_wave = WaveType::Rarefaction;
    fan.rho_star_left = l.rho * std::pow(ps / l.p, 1.0 / gamma);
    const double c_star = l.c * std::pow(ps / l.p, gm1 / (2.0 * gamma));
    fan.left_speed_head = l.v - l.c;
    fan.left_speed_tail = fan.v_star - c_star;
  }
  if (ps > r.p) {
    fan.right_wave = WaveType::Shock;
    fan.rho_star_right = r.rho * (ps / r.p + gm1 / gp1) / (gm1 / gp1 * ps / r.p + 1.0);
    fan.right_speed_head = fan.right_speed_tail =
        r.v + r.c * std::sqrt(gp1 / (2.0 * gamma) * ps / r.p + gm1 / (2.0 * gamma));
  } else {
    fan.right_wave = WaveType::Rarefaction;
    fan.rho_star_right = r.rho * std::pow(ps / r.p, 1.0 / gamma);
    const double c_star = r.c * std::pow(ps / r.p, gm1 / (2.0 * gamma));
    fan.right_speed_head = r.v + r.c;
    fan.right_speed_tail = fan.v_star + c_star;
  }
  return fan;
}

PrimitiveState RiemannFan::sample(double xi) const {
  const double gamma = gas.gamma;
  const double gm1 = gamma - 1.0, gp1 = gamma + 1.0;
  const double cl = sound_speed(left, gas);
  const double cr = sound_speed(right, gas);

  if (vacuum) {
    if (xi <= left_speed_head) return left;
    if (xi < left_speed_tail) {
      const double c = (2.0 * cl + gm1 * (left.vx - xi)) / gp1;
      const double v = xi + c;
      const double rho = left.rho * std::pow(c / cl, 2.0 / gm1);
      const double p = left.p * std::pow(c / cl, 2.0 * gamma / gm1);
      return {rho, v, left.vy, p};
    }
    if (xi <= right_speed_tail) {
      // vacuum region: zero density, zero pressure
      const double vy = xi < v_star ? left.vy : right.vy;
      return {0.0, xi, vy, 0.0};
    }
    if (xi < right_speed_head) {
      const double c = (2.0 * cr - gm1 * (right.vx - xi)) / gp1;
      const double v = xi - c;
      const double rho = right.rho * std::pow(c / cr, 2.0 / gm1);
      const double p = right.p * std::pow(c / cr, 2.0 * gamma / gm1);
      return {rho, v, right.vy, p};
    }
    return right;
  }

  if (xi <= v_star) {
    if (left_wave == WaveType::Shock) {
      if (xi <= left_speed_head) return left;
      return {rho_star_left, v_star, left.vy, p_star};
    }
    if (xi <= left_speed_head) return left;
    if (xi >= left_speed_tail) return {rho_star_left, v_star, left.vy, p_star};
    const double c = (2.0 * cl + gm1 * (left.vx - xi)) / gp1;
    const double v = xi + c;
    const double rho = left.rho * std::pow(c / cl, 2.0 / gm1);
    const double p = left.p * std::pow(c / cl, 2.0 * gamma / gm1);
    return {rho, v, left.vy, p};
  }

  if (right_wave == WaveType::Shock) {
    if (xi >= right_speed_head) return right;
    return {rho_star_right, v_star, right.vy, p_star};
  }
  if (xi >= right_speed_head) return right;
  if (xi <= right_speed_tail) return {rho_star_right, v_star, right.vy, p_star};
  const double c = (2.0 * cr - gm1 * (right.vx - xi)) / gp1;
  const double v = xi - c;
  const double rho = right.rho * std::pow(c / cr, 2.0 / gm1);
  const double p = right.p * std::pow(c / cr, 2.0 * gamma / gm1);
  return {rho, v, right.vy, p};
}

}  // namespace eulerflux
