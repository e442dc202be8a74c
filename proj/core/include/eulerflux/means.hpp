#ifndef EULERFLUX_MEANS_HPP
#define EULERFLUX_MEANS_HPP

#include <algorithm>
#include <cmath>

#include "eulerflux/euler.hpp"

// Mean values and jump operator used by the discrete chain rules that the
// entropy conservative two-point fluxes are built from. All means are
// evaluated on sorted arguments so that m(a,b) == m(b,a) bit for bit.

namespace eulerflux {

inline double jump(double minus, double plus) { return plus - minus; }

inline double arith_mean(double minus, double plus) {
  return 0.5 * (minus + plus);
}

/// (b - a) / (log b - log a), continuously extended with the limit a at a == b.
/// Near-equal branch: with z = lo/hi and u = (z-1)^2/(z+1)^2, for u < 1e-4 the
/// truncated series (a+b)/2 / (1 + u/3 + u^2/5 + u^3/7) gives full double
/// precision at the switch point.
inline double log_mean(double minus, double plus) {
  if (!(minus > 0.0) || !(plus > 0.0))
    throw NonpositiveArgument("log_mean requires positive arguments");
  const auto [lo, hi] = std::minmax(minus, plus);
  const double z = lo / hi;
  const double f = (z - 1.0) / (z + 1.0);
  const double u = f * f;
  if (u < 1e-4) {
    const double series = 1.0 + u * (1.0 / 3.0 + u * (1.0 / 5.0 + u * (1.0 / 7.0)));
    return 0.5 * (lo + hi) / series;
  }
  return (hi - lo) / (std::log(hi) - std::log(lo));
}

inline double geo_mean(double minus, double plus) {
  if (!(minus > 0.0) || !(plus > 0.0))
    throw NonpositiveArgument("geo_mean requires positive arguments");
  const auto [lo, hi] = std::minmax(minus, plus);
  return std::sqrt(lo * hi);
}

namespace detail {
// Relative test only: an absolute floor would misclassify pairs of tiny
// arguments with order-one relative jumps and spoil the chain rules there.
inline bool nearly_equal(double minus, double plus) {
  return std::abs(plus - minus) <= 1e-8 * (std::abs(minus) + std::abs(plus));
}
}  // namespace detail

/// <a>_r^{r-1} = (b^r - a^r) / (r (b - a)), the factor appearing in the
/// chain rule for jumps of a^r; limit a^{r-1} at a == b. Evaluated as
/// lo^r expm1(r log1p(d/lo)) / (r d), which has no cancellation for any
/// separation of the arguments.
inline double power_mean_pow_rm1(double minus, double plus, double r) {
  if (!(minus > 0.0) || !(plus > 0.0))
    throw NonpositiveArgument("power mean requires positive arguments");
  if (r == 0.0 || r == 1.0)
    throw InvalidExponent("power mean exponent must not be 0 or 1");
  const auto [lo, hi] = std::minmax(minus, plus);
  if (lo == hi) return std::pow(lo, r - 1.0);
  const double d = hi - lo;
  return std::pow(lo, r) * std::expm1(r * std::log1p(d / lo)) / (r * d);
}

/// ((b^r - a^r) / (r (b - a)))^{1/(r-1)}; limit a at a == b.
inline double power_mean_r(double minus, double plus, double r) {
  if (minus == plus && minus > 0.0) return minus;
  return std::pow(power_mean_pow_rm1(minus, plus, r), 1.0 / (r - 1.0));
}

/// exp of the exponential mean: (e^b - e^a) / (b - a), evaluated in the
/// overflow-safe shifted form e^hi * (1 - e^{-d}) / d with d = hi - lo.
inline double exp_mean_exp(double minus, double plus) {
  const auto [lo, hi] = std::minmax(minus, plus);
  if (detail::nearly_equal(lo, hi)) return std::exp(arith_mean(lo, hi));
  const double d = hi - lo;
  return std::exp(hi) * (-std::expm1(-d)) / d;
}

/// log((e^b - e^a) / (b - a)); limit a at a == b.
inline double exp_mean(double minus, double plus) {
  const auto [lo, hi] = std::minmax(minus, plus);
  if (detail::nearly_equal(lo, hi)) return arith_mean(lo, hi);
  const double d = hi - lo;
  return hi + std::log((-std::expm1(-d)) / d);
}

}  // namespace eulerflux

#endif
