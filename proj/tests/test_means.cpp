#include <doctest.h>

#include <cmath>
#include <random>

#include "eulerflux/means.hpp"

using namespace eulerflux;

namespace {

std::mt19937_64 rng(12345);

double positive_sample() {
  std::uniform_real_distribution<double> e(-3.0, 3.0);
  return std::pow(10.0, e(rng));
}

// relative to the largest participating term, not the (possibly cancelling)
// result
double rule_defect(long double lhs, long double rhs, long double scale) {
  return static_cast<double>(std::abs(lhs - rhs) / (scale + 1e-300L));
}

}  // namespace

TEST_CASE("jump") {
  CHECK(jump(1.0, 1.0) == 0.0);
  CHECK(jump(1.0, 3.0) == 2.0);
  CHECK(jump(3.0, 1.0) == -2.0);
}

TEST_CASE("arithmetic mean and product rule") {
  CHECK(arith_mean(1.0, 3.0) == 2.0);
  CHECK(arith_mean(0.7, 0.7) == 0.7);
  for (int i = 0; i < 100000; ++i) {
    const double am = positive_sample(), ap = positive_sample();
    const double bm = positive_sample(), bp = positive_sample();
    const long double lhs = (long double)ap * bp - (long double)am * bm;
    const long double t1 = (long double)arith_mean(am, ap) * jump(bm, bp);
    const long double t2 = (long double)arith_mean(bm, bp) * jump(am, ap);
    const long double scale = std::abs((long double)ap * bp) +
                              std::abs((long double)am * bm) + std::abs(t1) +
                              std::abs(t2);
    CHECK(rule_defect(lhs, t1 + t2, scale) <= 4e-16);
  }
}

TEST_CASE("logarithmic mean") {
  CHECK(log_mean(0.37, 0.37) == 0.37);
  CHECK(log_mean(1.0, std::exp(1.0)) ==
        doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
  CHECK_THROWS_AS(log_mean(-1.0, 2.0), NonpositiveArgument);
  CHECK_THROWS_AS(log_mean(1.0, 0.0), NonpositiveArgument);

  // near-equal arguments stay at full precision: compare against the defining
  // quotient evaluated through log1p, which has no cancellation
  const double a = 1.0, b = 1.0 + 1e-10;
  const double stable = (b - a) / std::log1p((b - a) / a);
  CHECK(log_mean(a, b) == doctest::Approx(stable).epsilon(1e-13));
  CHECK(log_mean(a, b) == doctest::Approx(arith_mean(a, b)).epsilon(1e-13));

  // chain rule jump(log a) = jump(a) / logmean(a)
  for (int i = 0; i < 100000; ++i) {
    const double am = positive_sample(), ap = positive_sample();
    const long double lhs = std::log((long double)ap) - std::log((long double)am);
    const long double rhs = (long double)jump(am, ap) / log_mean(am, ap);
    CHECK(rule_defect(lhs, rhs, std::abs(lhs) + 1.0L) <= 2e-15);
  }
}

TEST_CASE("geometric mean") {
  CHECK(geo_mean(4.0, 9.0) == 6.0);
  CHECK(geo_mean(0.2, 0.2) == 0.2);
  CHECK_THROWS_AS(geo_mean(0.0, 1.0), NonpositiveArgument);
  for (int i = 0; i < 100000; ++i) {
    const double am = positive_sample(), ap = positive_sample();
    const long double lhs = 1.0L / ap - 1.0L / am;
    const double gm = geo_mean(am, ap);
    const long double rhs = -(long double)jump(am, ap) / ((long double)gm * gm);
    CHECK(rule_defect(lhs, rhs, std::abs(lhs)) <= 4e-15);
  }
}

TEST_CASE("r-power mean") {
  // r = 2 recovers the arithmetic mean, r = -1 the geometric mean
  for (int i = 0; i < 1000; ++i) {
    const double am = positive_sample(), ap = positive_sample();
    CHECK(power_mean_r(am, ap, 2.0) ==
          doctest::Approx(arith_mean(am, ap)).epsilon(1e-14));
    CHECK(power_mean_r(am, ap, -1.0) ==
          doctest::Approx(geo_mean(am, ap)).epsilon(1e-14));
  }
  CHECK(power_mean_r(1.0, 2.0, 3.0) ==
        doctest::Approx(std::sqrt(7.0 / 3.0)).epsilon(1e-14));
  CHECK_THROWS_AS(power_mean_r(1.0, 2.0, 0.0), InvalidExponent);
  CHECK_THROWS_AS(power_mean_r(1.0, 2.0, 1.0), InvalidExponent);
  CHECK_THROWS_AS(power_mean_r(-1.0, 2.0, 3.0), NonpositiveArgument);

  // chain rule jump(a^r) = r <a>_r^{r-1} jump(a)
  for (double r : {3.0, -2.0, 0.5, -1.0}) {
    for (int i = 0; i < 20000; ++i) {
      const double am = positive_sample(), ap = positive_sample();
      const long double lhs = std::pow((long double)ap, (long double)r) -
                              std::pow((long double)am, (long double)r);
      const long double rhs =
          (long double)r * power_mean_pow_rm1(am, ap, r) * jump(am, ap);
      CHECK(rule_defect(lhs, rhs, std::abs(lhs)) <= 2e-13);
    }
  }
}

TEST_CASE("exponential mean") {
  CHECK(exp_mean(0.25, 0.25) == 0.25);
  {
    const double m = exp_mean(0.0, std::log(2.0));
    CHECK(std::exp(m) == doctest::Approx(1.0 / std::log(2.0)).epsilon(1e-14));
    CHECK(m == doctest::Approx(0.3665129205816643).epsilon(1e-12));
  }
  // shifted evaluation keeps large arguments finite
  CHECK(std::isfinite(exp_mean(700.0, 710.0)));
  CHECK(exp_mean(700.0, 710.0) > 700.0);

  std::uniform_real_distribution<double> chi(-30.0, 30.0);
  for (int i = 0; i < 100000; ++i) {
    const double am = chi(rng), ap = chi(rng);
    const double m = exp_mean(am, ap);
    CHECK(m >= std::min(am, ap) - 1e-12);
    CHECK(m <= std::max(am, ap) + 1e-12);
    const long double lhs = std::exp((long double)ap) - std::exp((long double)am);
    const long double rhs = (long double)exp_mean_exp(am, ap) * jump(am, ap);
    CHECK(rule_defect(lhs, rhs, std::abs(lhs)) <= 4e-14);
  }
}

TEST_CASE("means are symmetric, consistent, and between their arguments") {
  for (int i = 0; i < 20000; ++i) {
    const double a = positive_sample(), b = positive_sample();
    const double lo = std::min(a, b), hi = std::max(a, b);

    CHECK(arith_mean(a, b) == arith_mean(b, a));
    CHECK(log_mean(a, b) == log_mean(b, a));
    CHECK(geo_mean(a, b) == geo_mean(b, a));
    CHECK(power_mean_r(a, b, 3.0) == power_mean_r(b, a, 3.0));
    CHECK(exp_mean(a, b) == exp_mean(b, a));

    CHECK(arith_mean(a, a) == a);
    CHECK(log_mean(a, a) == a);
    CHECK(geo_mean(a, a) == a);
    CHECK(power_mean_r(a, a, -2.5) == a);
    CHECK(exp_mean(a, a) == a);

    for (double m : {arith_mean(a, b), log_mean(a, b), geo_mean(a, b),
                     power_mean_r(a, b, 3.0)}) {
      CHECK(m >= lo * (1.0 - 1e-14));
      CHECK(m <= hi * (1.0 + 1e-14));
    }
    // needed by the density positivity argument
    CHECK(log_mean(a, b) <= arith_mean(a, b) * (1.0 + 1e-14));
  }
}
