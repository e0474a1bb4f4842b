#include <benchmark/benchmark.h>

#include "geab/electric.hpp"
#include "geab/magnetic.hpp"
#include "geab/oracle/bvp.hpp"

namespace {

using namespace geab;

void BM_MagneticProfile(benchmark::State& state) {
  const PodolskyScale s(0.1);
  for (auto _ : state)
    for (int i = 0; i <= 300; ++i) benchmark::DoNotOptimize(magnetic::b_z(RadialPoint::at(i * 0.01), s));
}
BENCHMARK(BM_MagneticProfile);

void BM_ElectricPhase(benchmark::State& state) {
  const PodolskyScale s(0.1);
  for (auto _ : state)
    benchmark::DoNotOptimize(electric::delta_phi_podolsky({0.0, 0.5, 1, 1}, s, electric::PotentialMethod::exact));
}
BENCHMARK(BM_ElectricPhase);

void BM_RadialBvp(benchmark::State& state) {
  const PodolskyScale s(0.1);
  const auto src = oracle::magnetic_source(s);
  const auto grid = oracle::RadialGrid::uniform(s.surface_zeta() + 20.0, s.surface_zeta(), state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(oracle::solve_radial_bvp(src, grid, oracle::FarBoundary::dirichlet_zero));
}
BENCHMARK(BM_RadialBvp)->Arg(1025)->Arg(4097)->Unit(benchmark::kMillisecond);

}  // namespace
