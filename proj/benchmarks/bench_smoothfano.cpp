#include <benchmark/benchmark.h>

#include "smoothfano/smoothfano.hpp"

using namespace sfano;

namespace {

Polytope planted() {
  std::vector<Polytope> parts(3, bundle_b(1));
  parts.insert(parts.end(), 120, hexagon());
  return direct_sum(parts);
}

void BM_ValidateFull(benchmark::State& state) {
  const Polytope p = bundle_b(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_smooth_fano(p, Mode::Full));
}
BENCHMARK(BM_ValidateFull)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_ValidateLocal(benchmark::State& state) {
  const Polytope p = planted();
  for (auto _ : state) benchmark::DoNotOptimize(is_smooth_fano(p, Mode::Local));
}
BENCHMARK(BM_ValidateLocal)->Unit(benchmark::kMillisecond);

void BM_Pivot(benchmark::State& state) {
  const Polytope p = random_image(direct_power(example4d(), 2), 7).image;
  const FacetFrame f = initial_facet(p);
  std::size_t pos = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pivot(p, f, pos));
    pos = (pos + 1) % f.dim();
  }
}
BENCHMARK(BM_Pivot);

void BM_HexagonSplitPlanted(benchmark::State& state) {
  const Polytope p = planted();
  for (auto _ : state) benchmark::DoNotOptimize(hexagon_split(p, Mode::Local));
}
BENCHMARK(BM_HexagonSplitPlanted)->Unit(benchmark::kMillisecond);

void BM_FinestSplit(benchmark::State& state) {
  const Polytope p = random_image(direct_sum(std::vector<Polytope>{bundle_b(1), example4d(), hexagon()}), 3).image;
  for (auto _ : state) benchmark::DoNotOptimize(finest_split(p, Mode::Full));
}
BENCHMARK(BM_FinestSplit)->Unit(benchmark::kMillisecond);

void BM_NormalForm(benchmark::State& state) {
  const Polytope p = random_image(direct_power(hexagon(), static_cast<std::size_t>(state.range(0))), 5).image;
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(p));
}
BENCHMARK(BM_NormalForm)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_VerifyBounds(benchmark::State& state) {
  const Polytope p = bundle_b(2);
  for (auto _ : state) benchmark::DoNotOptimize(verify_bounds(p, Mode::Full));
}
BENCHMARK(BM_VerifyBounds)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
