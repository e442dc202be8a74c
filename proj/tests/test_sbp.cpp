#include <doctest.h>

#include <cmath>

#include "eulerflux/sbp.hpp"

using namespace eulerflux;

TEST_CASE("low degree operators match the closed forms") {
  {
    const SbpOperator op = build_lobatto_sbp(1);
    CHECK(op.nodes[0] == -1.0);
    CHECK(op.nodes[1] == 1.0);
    CHECK(op.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(op.weights[1] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(op.D(0, 0) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(op.D(0, 1) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(op.D(1, 0) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(op.D(1, 1) == doctest::Approx(0.5).epsilon(1e-15));
  }
  {
    const SbpOperator op = build_lobatto_sbp(2);
    CHECK(op.nodes[1] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(op.weights[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(op.weights[1] == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  }
  CHECK_THROWS_AS(build_lobatto_sbp(0), DegreeOutOfRange);
  CHECK_THROWS_AS(build_lobatto_sbp(13), DegreeOutOfRange);
}

TEST_CASE("SBP identity holds for all supported degrees") {
  for (int p = 1; p <= 12; ++p) {
    const SbpOperator op = build_lobatto_sbp(p);
    for (double r : op.sbp_residual()) CHECK(std::abs(r) <= 1e-12);
  }
}

TEST_CASE("derivative exactness on monomials") {
  for (int p = 1; p <= 8; ++p) {
    const SbpOperator op = build_lobatto_sbp(p);
    const int n = op.n();
    // constants map to zero
    for (int i = 0; i < n; ++i) {
      double acc = 0.0;
      for (int k = 0; k < n; ++k) acc += op.D(i, k);
      CHECK(std::abs(acc) <= 1e-13);
    }
    for (int deg = 1; deg <= p; ++deg) {
      for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int k = 0; k < n; ++k) acc += op.D(i, k) * std::pow(op.nodes[k], deg);
        CHECK(std::abs(acc - deg * std::pow(op.nodes[i], deg - 1)) <= 1e-11);
      }
    }
  }
}

TEST_CASE("quadrature integrates degree 2p-1 exactly") {
  for (int p = 1; p <= 10; ++p) {
    const SbpOperator op = build_lobatto_sbp(p);
    for (int deg = 0; deg <= 2 * p - 1; ++deg) {
      double acc = 0.0;
      for (int i = 0; i < op.n(); ++i)
        acc += op.weights[i] * std::pow(op.nodes[i], deg);
      const double exact = deg % 2 == 1 ? 0.0 : 2.0 / (deg + 1);
      CHECK(std::abs(acc - exact) <= 1e-12);
    }
  }
}

TEST_CASE("tensorized operators") {
  const SbpOperator op = build_lobatto_sbp(4);
  const TensorOperator2D top = tensorize(op);
  const int n = op.n();
  std::vector<double> gx(n * n), ones(n * n, 1.0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) gx[j * n + i] = op.nodes[i];

  const std::vector<double> dx = top.apply_dx(gx);
  const std::vector<double> dy = top.apply_dy(gx);
  for (int k = 0; k < n * n; ++k) {
    CHECK(std::abs(dx[k] - 1.0) <= 1e-13);
    CHECK(std::abs(dy[k]) <= 1e-13);
  }

  // divergence theorem on tensor polynomials of degree <= p
  std::vector<double> u(n * n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const double x = op.nodes[i], y = op.nodes[j];
      u[j * n + i] = (0.3 + x * (1.0 + x * (0.5 - 0.25 * x * x))) *
                     (1.0 + y * (0.7 + 0.1 * y * y));
    }
  const std::vector<double> du = top.apply_dx(u);
  double vol = 0.0;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) vol += top.mass(i, j) * du[j * n + i];
  CHECK(std::abs(vol - top.boundary_integral_x(u)) <= 1e-11);

  const std::vector<double> dv = top.apply_dy(u);
  double voly = 0.0;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) voly += top.mass(i, j) * dv[j * n + i];
  CHECK(std::abs(voly - top.boundary_integral_y(u)) <= 1e-11);
}
