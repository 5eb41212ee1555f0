#include <benchmark/benchmark.h>

#include "mtz/cone_zeta.hpp"
#include "mtz/euler_product.hpp"
#include "mtz/fq_oracle.hpp"
#include "mtz/height_zeta.hpp"
#include "mtz/presets.hpp"

using namespace mtz;

namespace {

void BM_QSigma(benchmark::State& state) {
  const Fan f = preset_fan("P1xP2");
  for (auto _ : state) benchmark::DoNotOptimize(q_sigma(f));
}
BENCHMARK(BM_QSigma);

void BM_ZetaDirectP2(benchmark::State& state) {
  const Fan f = preset_fan("P2");
  const IVec dmax(3, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zeta_direct_genus0(f, dmax));
}
BENCHMARK(BM_ZetaDirectP2)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_ZetaFourierP2(benchmark::State& state) {
  const Fan f = preset_fan("P2");
  const IVec dmax(3, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zeta_fourier_genus0(f, dmax));
}
BENCHMARK(BM_ZetaFourierP2)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_ZetaFourierP1xP1(benchmark::State& state) {
  const Fan f = preset_fan("P1xP1");
  const IVec dmax(4, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zeta_fourier_genus0(f, dmax));
}
BENCHMARK(BM_ZetaFourierP1xP1)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_KapranovEulerProduct(benchmark::State& state) {
  const int trunc = int(state.range(0));
  GradedSeries f(1, 0, trunc);
  for (int e = 0; e <= trunc; ++e) f.add_term({{e}, {}}, LL(1));
  for (auto _ : state) benchmark::DoNotOptimize(euler_product_genus0(f));
}
BENCHMARK(BM_KapranovEulerProduct)->Arg(8)->Arg(16)->Arg(32);

void BM_LeadingConstant(benchmark::State& state) {
  const Fan f = preset_fan("P1xP2");
  for (auto _ : state) benchmark::DoNotOptimize(leading_constant(f, CurveData::projective_line(), state.range(0)));
}
BENCHMARK(BM_LeadingConstant)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_CountHomP2(benchmark::State& state) {
  const Fan f = preset_fan("P2");
  const long long d = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(count_hom_fq(f, {d, d, d}, 2));
}
BENCHMARK(BM_CountHomP2)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_ConeLevels(benchmark::State& state) {
  const ConeFan cf = preset_cone_fan("subdivided");
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_levels(cf, {1, 1}, state.range(0)));
}
BENCHMARK(BM_ConeLevels)->Arg(20)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
