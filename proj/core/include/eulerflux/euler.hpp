#ifndef EULERFLUX_EULER_HPP
#define EULERFLUX_EULER_HPP

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace eulerflux {

struct GasModel {
  double gamma{1.4};
};

/// Conserved variables (rho, rho*vx, rho*vy, rho*e) or a flux sample thereof.
using Vec4 = std::array<double, 4>;
using ConservedState = Vec4;
using FluxVector = Vec4;

struct PrimitiveState {
  double rho;
  double vx;
  double vy;
  double p;
};

enum class Axis { x, y };

struct NonpositiveDensity : std::domain_error {
  explicit NonpositiveDensity(double rho)
      : std::domain_error("nonpositive density " + std::to_string(rho)) {}
};
struct NonpositiveArgument : std::domain_error {
  using std::domain_error::domain_error;
};
struct InvalidExponent : std::domain_error {
  using std::domain_error::domain_error;
};
struct DegreeOutOfRange : std::domain_error {
  using std::domain_error::domain_error;
};
struct InadmissibleInput : std::domain_error {
  using std::domain_error::domain_error;
};

inline Vec4 operator+(const Vec4& a, const Vec4& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}
inline Vec4 operator-(const Vec4& a, const Vec4& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}
inline Vec4 operator*(double s, const Vec4& a) {
  return {s * a[0], s * a[1], s * a[2], s * a[3]};
}
inline double dot(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

inline bool admissible(const PrimitiveState& q) {
  return std::isfinite(q.rho) && std::isfinite(q.vx) && std::isfinite(q.vy) &&
         std::isfinite(q.p) && q.rho > 0.0 && q.p > 0.0;
}

/// May return a state with p <= 0; admissibility is the caller's check.
inline PrimitiveState cons_to_prim(const ConservedState& u, const GasModel& g) {
  if (!(u[0] > 0.0)) throw NonpositiveDensity(u[0]);
  const double vx = u[1] / u[0];
  const double vy = u[2] / u[0];
  const double p = (g.gamma - 1.0) * (u[3] - 0.5 * (u[1] * vx + u[2] * vy));
  return {u[0], vx, vy, p};
}

inline ConservedState prim_to_cons(const PrimitiveState& q, const GasModel& g) {
  if (!(q.rho > 0.0)) throw NonpositiveDensity(q.rho);
  const double E = 0.5 * q.rho * (q.vx * q.vx + q.vy * q.vy) + q.p / (g.gamma - 1.0);
  return {q.rho, q.rho * q.vx, q.rho * q.vy, E};
}

inline bool admissible(const ConservedState& u, const GasModel& g) {
  if (!std::isfinite(u[0]) || !std::isfinite(u[1]) || !std::isfinite(u[2]) ||
      !std::isfinite(u[3]) || u[0] <= 0.0)
    return false;
  return cons_to_prim(u, g).p > 0.0;
}

inline FluxVector physical_flux(const PrimitiveState& q, Axis dir, const GasModel& g) {
  const double E = 0.5 * q.rho * (q.vx * q.vx + q.vy * q.vy) + q.p / (g.gamma - 1.0);
  if (dir == Axis::x) {
    return {q.rho * q.vx, q.rho * q.vx * q.vx + q.p, q.rho * q.vx * q.vy,
            (E + q.p) * q.vx};
  }
  return {q.rho * q.vy, q.rho * q.vx * q.vy, q.rho * q.vy * q.vy + q.p,
          (E + q.p) * q.vy};
}

inline double specific_entropy(const PrimitiveState& q, const GasModel& g) {
  return std::log(q.p) - g.gamma * std::log(q.rho);
}

struct EntropyPair {
  double U;
  double Fx;
  double Fy;
  double s;
};

inline EntropyPair entropy_pair(const PrimitiveState& q, const GasModel& g) {
  const double s = specific_entropy(q, g);
  const double U = -q.rho * s / (g.gamma - 1.0);
  return {U, U * q.vx, U * q.vy, s};
}

/// Entropy variables w = U'(u) for U = -rho*s/(gamma-1).
inline Vec4 entropy_variables(const PrimitiveState& q, const GasModel& g) {
  const double s = specific_entropy(q, g);
  const double rho_p = q.rho / q.p;
  const double w1 = g.gamma / (g.gamma - 1.0) - s / (g.gamma - 1.0) -
                    0.5 * rho_p * (q.vx * q.vx + q.vy * q.vy);
  return {w1, rho_p * q.vx, rho_p * q.vy, -rho_p};
}

struct FluxPotential {
  double psi_x;
  double psi_y;
};

inline FluxPotential flux_potential(const PrimitiveState& q) {
  return {q.rho * q.vx, q.rho * q.vy};
}

/// Entropy variables and flux potentials of the system with the roles of
/// energy and entropy exchanged (conserved rho*s, "entropy" rho*e).
struct ReversedEntropyQuantities {
  Vec4 w;
  double psi_x;
  double psi_y;
};

inline ReversedEntropyQuantities reversed_entropy_quantities(const PrimitiveState& q,
                                                             const GasModel& g) {
  const double rt = q.p / q.rho;
  const double s = std::log(rt) - (g.gamma - 1.0) * std::log(q.rho);
  const double v2 = q.vx * q.vx + q.vy * q.vy;
  const double w1 =
      -0.5 * v2 + g.gamma / (g.gamma - 1.0) * rt - s * rt / (g.gamma - 1.0);
  return {{w1, q.vx, q.vy, rt / (g.gamma - 1.0)}, q.p * q.vx, q.p * q.vy};
}

inline double sound_speed(const PrimitiveState& q, const GasModel& g) {
  return std::sqrt(g.gamma * q.p / q.rho);
}

inline double normal_velocity(const PrimitiveState& q, Axis dir) {
  return dir == Axis::x ? q.vx : q.vy;
}

/// max(|v_dir| + c) over the pair; satisfies lambda >= max|v_dir|.
inline double max_wavespeed(const PrimitiveState& ql, const PrimitiveState& qr,
                            Axis dir, const GasModel& g) {
  const double l = std::abs(normal_velocity(ql, dir)) + sound_speed(ql, g);
  const double r = std::abs(normal_velocity(qr, dir)) + sound_speed(qr, g);
  return std::max(l, r);
}

}  // namespace eulerflux

#endif
