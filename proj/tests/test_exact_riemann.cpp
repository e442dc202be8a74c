#include <doctest.h>

#include <cmath>

#include "eulerflux/exact_riemann.hpp"

using namespace eulerflux;

namespace {

// bisection oracle on the star-pressure equation, independent of the
// production Newton iteration
long double oracle_side(long double p, long double rho, long double pk,
                        long double gamma) {
  const long double c = std::sqrt(gamma * pk / rho);
  if (p > pk) {
    const long double a = 2.0L / ((gamma + 1.0L) * rho);
    const long double b = (gamma - 1.0L) / (gamma + 1.0L) * pk;
    return (p - pk) * std::sqrt(a / (p + b));
  }
  return 2.0L * c / (gamma - 1.0L) *
         (std::pow(p / pk, (gamma - 1.0L) / (2.0L * gamma)) - 1.0L);
}

long double oracle_p_star(const PrimitiveState& l, const PrimitiveState& r,
                          long double gamma) {
  const auto f = [&](long double p) {
    return oracle_side(p, l.rho, l.p, gamma) + oracle_side(p, r.rho, r.p, gamma) +
           (long double)(r.vx - l.vx);
  };
  long double lo = 1e-30L, hi = 10.0L * std::max(l.p, r.p);
  while (f(hi) < 0.0L) hi *= 2.0L;
  for (int it = 0; it < 200; ++it) {
    const long double mid = 0.5L * (lo + hi);
    (f(mid) > 0.0L ? hi : lo) = mid;
  }
  return 0.5L * (lo + hi);
}

}  // namespace

TEST_CASE("equal states give a constant fan") {
  const GasModel g{1.4};
  const PrimitiveState q{0.7, 1.3, -0.4, 2.0};
  const RiemannFan fan = exact_riemann(q, q, g);
  for (double xi : {-5.0, -1.0, 0.0, 1.3, 4.0}) {
    const PrimitiveState s = fan.sample(xi);
    CHECK(s.rho == doctest::Approx(q.rho).epsilon(1e-12));
    CHECK(s.p == doctest::Approx(q.p).epsilon(1e-12));
  }
}

TEST_CASE("Sod star region") {
  const GasModel g{1.4};
  const PrimitiveState l{1.0, 0.0, 0.0, 1.0}, r{0.125, 0.0, 0.0, 0.1};
  const RiemannFan fan = exact_riemann(l, r, g);
  // frozen from the bisection oracle
  CHECK(fan.p_star == doctest::Approx(0.30313017805064682).epsilon(1e-11));
  CHECK(fan.v_star == doctest::Approx(0.92745262004894995).epsilon(1e-11));
  CHECK((long double)fan.p_star ==
        doctest::Approx((double)oracle_p_star(l, r, 1.4L)).epsilon(1e-10));
  CHECK(fan.left_wave == WaveType::Rarefaction);
  CHECK(fan.right_wave == WaveType::Shock);
  CHECK(!fan.vacuum);

  // Rankine-Hugoniot across the right shock
  const PrimitiveState star{fan.rho_star_right, fan.v_star, 0.0, fan.p_star};
  const Vec4 ju = prim_to_cons(star, g) - prim_to_cons(r, g);
  const FluxVector jf = physical_flux(star, Axis::x, g) - physical_flux(r, Axis::x, g);
  for (int c = 0; c < 4; ++c)
    CHECK(std::abs(jf[c] - fan.right_speed_head * ju[c]) <= 1e-9);
}

TEST_CASE("near-vacuum double rarefaction") {
  const GasModel g{1.4};
  const PrimitiveState l{1.0, -2.0, 0.0, 0.4}, r{1.0, 2.0, 0.0, 0.4};
  const RiemannFan fan = exact_riemann(l, r, g);
  CHECK(!fan.vacuum);
  CHECK(fan.p_star == doctest::Approx(0.001893873420054763).epsilon(1e-11));
  CHECK(fan.p_star == doctest::Approx(0.00189).epsilon(2e-3));
  CHECK((long double)fan.p_star ==
        doctest::Approx((double)oracle_p_star(l, r, 1.4L)).epsilon(1e-10));
  CHECK(fan.left_wave == WaveType::Rarefaction);
  CHECK(fan.right_wave == WaveType::Rarefaction);
  // the sampled center state has a low but positive density
  const PrimitiveState mid = fan.sample(0.0);
  CHECK(mid.rho > 0.0);
  CHECK(mid.rho < 0.05);
}

TEST_CASE("vacuum-forming inputs are flagged") {
  const GasModel g{1.4};
  const PrimitiveState l{1.0, -20.0, 0.0, 0.4}, r{1.0, 20.0, 0.0, 0.4};
  const RiemannFan fan = exact_riemann(l, r, g);
  CHECK(fan.vacuum);
  const PrimitiveState mid = fan.sample(0.0);
  CHECK(mid.rho == 0.0);
  CHECK(fan.sample(-30.0).rho == 1.0);
  CHECK(fan.sample(30.0).rho == 1.0);
}

TEST_CASE("sampling is monotone across the fan structure") {
  const GasModel g{1.4};
  const PrimitiveState l{1.0, 0.75, 0.0, 1.0}, r{0.125, 0.0, 0.0, 0.1};
  const RiemannFan fan = exact_riemann(l, r, g);
  // states before and after each wave agree with the fan fields
  CHECK(fan.sample(fan.left_speed_head - 1e-6).rho == doctest::Approx(l.rho));
  CHECK(fan.sample(fan.left_speed_tail + 1e-6).rho ==
        doctest::Approx(fan.rho_star_left).epsilon(1e-6));
  CHECK(fan.sample(fan.right_speed_head + 1e-6).rho == doctest::Approx(r.rho));
  // tangential velocity switches at the contact
  const PrimitiveState l2{1.0, 0.75, 3.0, 1.0}, r2{0.125, 0.0, -2.0, 0.1};
  const RiemannFan fan2 = exact_riemann(l2, r2, g);
  CHECK(fan2.sample(fan2.v_star - 1e-9).vy == 3.0);
  CHECK(fan2.sample(fan2.v_star + 1e-9).vy == -2.0);
}
