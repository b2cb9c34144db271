#include <benchmark/benchmark.h>

#include "halfspace/bessel.hpp"
#include "halfspace/channel.hpp"
#include "halfspace/continuous.hpp"
#include "halfspace/greens.hpp"
#include "halfspace/prony.hpp"

using namespace halfspace;

namespace {
const GroundModel kGround = GroundModel::from_impedance(0.1, {0.3, -0.1});
const LinkGeometry kLink(12.0, 10.0, 4.0, 1.0, 10.0);

const ImageExpansion& expansion() {
  static const ImageExpansion e = fit_image_expansion(kGround, ContourSpec{});
  return e;
}
}  // namespace

static void BM_J0Series(benchmark::State& state) {
  cplx z{3.0, 1.5};
  for (auto _ : state) benchmark::DoNotOptimize(j0(z));
}
BENCHMARK(BM_J0Series);

static void BM_J0Asymptotic(benchmark::State& state) {
  cplx z{300.0, 1.5};
  for (auto _ : state) benchmark::DoNotOptimize(j0(z));
}
BENCHMARK(BM_J0Asymptotic);

static void BM_PronyFit(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fit_image_expansion(kGround, ContourSpec{}));
}
BENCHMARK(BM_PronyFit);

static void BM_GreenClosed(benchmark::State& state) {
  const Point3 r{10.0, 0.0, 1.0}, s{0.0, 0.0, 10.0};
  const auto& e = expansion();
  for (auto _ : state) benchmark::DoNotOptimize(g_half_closed(r, s, e));
}
BENCHMARK(BM_GreenClosed);

static void BM_GreenOracle(benchmark::State& state) {
  const Point3 r{10.0, 0.0, 5.0}, s{0.0, 0.0, 5.0};
  for (auto _ : state) benchmark::DoNotOptimize(g_half_oracle(r, s, kGround));
}
BENCHMARK(BM_GreenOracle)->Unit(benchmark::kMillisecond);

static void BM_ChannelMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto green = GreensEvaluator::half_space(kGround, expansion());
  for (auto _ : state) benchmark::DoNotOptimize(build_channel_matrix(kLink, n, n, green));
}
BENCHMARK(BM_ChannelMatrix)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_EdofDiscrete(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto H = build_channel_matrix(kLink, n, n, GreensEvaluator::half_space(kGround, expansion()));
  for (auto _ : state) benchmark::DoNotOptimize(edof_discrete(H));
}
BENCHMARK(BM_EdofDiscrete)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_EdofContinuous(benchmark::State& state) {
  const auto green = GreensEvaluator::half_space(kGround, expansion());
  const LineQuadrature quad(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(edof_continuous(kLink, green, quad));
}
BENCHMARK(BM_EdofContinuous)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
