#include <benchmark/benchmark.h>

#include "geab/specfun.hpp"

namespace {

using namespace geab::specfun;

void BM_BesselI0(benchmark::State& state) {
  const double z = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(bessel_i(0, z, IScaling::times_exp_minus_z).value());
}
BENCHMARK(BM_BesselI0)->Arg(5)->Arg(50)->Arg(500)->Arg(5000);

void BM_BesselK1(benchmark::State& state) {
  const double z = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(bessel_k(1, z, KScaling::times_exp_plus_z).value());
}
BENCHMARK(BM_BesselK1)->Arg(5)->Arg(50)->Arg(500)->Arg(5000);

void BM_StruveL0(benchmark::State& state) {
  const double z = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(struve_l(0, z).value());
}
BENCHMARK(BM_StruveL0)->Arg(5)->Arg(100)->Arg(400);

void BM_IntK0(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bessel_k0_integral(3.0));
}
BENCHMARK(BM_IntK0);

}  // namespace
