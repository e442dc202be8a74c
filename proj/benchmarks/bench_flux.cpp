#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "eulerflux/cases.hpp"
#include "eulerflux/suliciu.hpp"

using namespace eulerflux;

namespace {

std::vector<std::pair<PrimitiveState, PrimitiveState>> random_pairs(size_t n) {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> e(-2.0, 2.0);
  std::uniform_real_distribution<double> v(-5.0, 5.0);
  std::vector<std::pair<PrimitiveState, PrimitiveState>> pairs(n);
  for (auto& [a, b] : pairs) {
    a = {std::pow(10.0, e(rng)), v(rng), v(rng), std::pow(10.0, e(rng))};
    b = {std::pow(10.0, e(rng)), v(rng), v(rng), std::pow(10.0, e(rng))};
  }
  return pairs;
}

void BM_VolumeFlux(benchmark::State& state) {
  const auto kind = static_cast<VolumeFluxKind>(state.range(0));
  const GasModel g{1.4};
  const auto pairs = random_pairs(512);
  size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ & 511];
    benchmark::DoNotOptimize(ec_volume_flux(kind, a, b, Axis::x, g));
  }
}
BENCHMARK(BM_VolumeFlux)
    ->DenseRange(0, static_cast<int>(VolumeFluxKind::Pirozzoli), 1);

void BM_Suliciu(benchmark::State& state) {
  const GasModel g{1.4};
  const auto pairs = random_pairs(512);
  size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ & 511];
    benchmark::DoNotOptimize(suliciu_flux(a, b, Axis::x, g));
  }
}
BENCHMARK(BM_Suliciu);

void BM_SodRhs(benchmark::State& state) {
  const TestCase tc = *find_case("sod");
  SchemeConfig cfg;
  cfg.degree = static_cast<int>(state.range(0));
  cfg.volume.kind = VolumeFluxKind::Ch1;
  cfg.surface.family = SurfaceScheme::Family::Suliciu;
  const GasModel g{tc.gamma};
  const Mesh mesh = make_interval_mesh(tc.x_min, tc.x_max, 64, tc.boundary);
  Semidiscretization disc(mesh, cfg.degree, cfg, g);
  disc.set_exterior_states(tc.left, tc.right);
  const std::vector<Vec4> u = disc.project(tc.initial_condition());
  for (auto _ : state) benchmark::DoNotOptimize(disc.rhs(u));
}
BENCHMARK(BM_SodRhs)->Arg(1)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
