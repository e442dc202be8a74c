#include <doctest.h>

#include <cmath>
#include <random>

#include "eulerflux/suliciu.hpp"

using namespace eulerflux;

namespace {

std::mt19937_64 rng(97531);

PrimitiveState random_state() {
  std::uniform_real_distribution<double> e(-3.0, 3.0);
  std::uniform_real_distribution<double> v(-10.0, 10.0);
  return {std::pow(10.0, e(rng)), v(rng), v(rng), std::pow(10.0, e(rng))};
}

}  // namespace

TEST_CASE("consistency, supersonic branch") {
  const GasModel g{1.4};
  const PrimitiveState q{1.0, 5.0, 0.0, 1.0};  // v - c/rho > 0
  CHECK(suliciu_flux(q, q, Axis::x, g) == physical_flux(q, Axis::x, g));
  for (int i = 0; i < 2000; ++i) {
    const PrimitiveState r = random_state();
    CHECK(suliciu_flux(r, r, Axis::x, g) == physical_flux(r, Axis::x, g));
    CHECK(suliciu_flux(r, r, Axis::y, g) == physical_flux(r, Axis::y, g));
  }
}

TEST_CASE("stationary contact is resolved exactly") {
  const GasModel g{1.4};
  const FluxVector f =
      suliciu_flux({1.0, 0.0, 0.0, 1.0}, {0.125, 0.0, 0.0, 1.0}, Axis::x, g);
  CHECK(f[0] == 0.0);
  CHECK(f[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(f[2] == 0.0);
  CHECK(f[3] == 0.0);
}

TEST_CASE("star states stay admissible") {
  const GasModel g{1.4};
  for (int i = 0; i < 100000; ++i) {
    const PrimitiveState qm = random_state(), qp = random_state();
    const SuliciuIntermediates im = suliciu_intermediates(qm, qp, Axis::x, g);
    CHECK(im.c_minus > 0.0);
    CHECK(im.c_plus > 0.0);
    CHECK(im.rho_star_minus > 0.0);
    CHECK(im.rho_star_plus > 0.0);
    CHECK(im.eps_star_minus >= 0.0);
    CHECK(im.eps_star_plus >= 0.0);
  }
}

TEST_CASE("relaxation CFL speed") {
  const GasModel g{1.4};
  const PrimitiveState rest{1.0, 0.0, 0.0, 1.0};
  CHECK(suliciu_cfl(rest, rest, Axis::x, g) ==
        doctest::Approx(std::sqrt(1.4)).epsilon(1e-14));
  // Sod states, direct evaluation of the speed formulas: p+ < p- engages the
  // second case split
  const PrimitiveState l{1.0, 0.0, 0.0, 1.0}, r{0.125, 0.0, 0.0, 0.1};
  const double am = std::sqrt(1.4), ap = std::sqrt(1.4 * 0.1 / 0.125);
  const double cp_rhop = ap + 1.2 * std::max((1.0 - 0.1) / (1.0 * am), 0.0);
  const double cp = 0.125 * cp_rhop;
  const double cm_rhom = am + 1.2 * std::max((0.1 - 1.0) / cp, 0.0);
  CHECK(suliciu_cfl(l, r, Axis::x, g) ==
        doctest::Approx(std::max(cm_rhom, cp_rhop)).epsilon(1e-14));
  for (int i = 0; i < 5000; ++i) {
    const PrimitiveState a = random_state(), b = random_state();
    CHECK(suliciu_cfl(a, b, Axis::x, g) > 0.0);
  }
}

TEST_CASE("upwind limits") {
  const GasModel g{1.4};
  // strongly supersonic to the right: the left state flux is used
  const PrimitiveState l{1.0, 9.0, 0.5, 1.0}, r{0.5, 8.0, -0.2, 0.8};
  CHECK(suliciu_flux(l, r, Axis::x, g) == physical_flux(l, Axis::x, g));
  // strongly supersonic to the left
  const PrimitiveState l2{1.0, -9.0, 0.5, 1.0}, r2{0.5, -8.0, -0.2, 0.8};
  CHECK(suliciu_flux(l2, r2, Axis::x, g) == physical_flux(r2, Axis::x, g));
}

TEST_CASE("rejects inadmissible inputs") {
  const GasModel g{1.4};
  CHECK_THROWS_AS(
      suliciu_flux({-1.0, 0.0, 0.0, 1.0}, {1.0, 0.0, 0.0, 1.0}, Axis::x, g),
      InadmissibleInput);
  CHECK_THROWS_AS(
      suliciu_flux({1.0, 0.0, 0.0, -2.0}, {1.0, 0.0, 0.0, 1.0}, Axis::x, g),
      InadmissibleInput);
}
