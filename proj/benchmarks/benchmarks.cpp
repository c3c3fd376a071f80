#include <benchmark/benchmark.h>

#include "regtri/equivalence.hpp"
#include "regtri/generator.hpp"
#include "regtri/geometry.hpp"
#include "regtri/tri_io.hpp"

using namespace regtri;

static void BM_Generate(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto disk = generate(d, k);
    benchmark::DoNotOptimize(disk.surface.vertex_count());
  }
}
BENCHMARK(BM_Generate)->Args({7, 4})->Args({7, 6})->Args({8, 5})->Args({12, 4})
    ->Unit(benchmark::kMillisecond);

static void BM_VerifyInvariants(benchmark::State& state) {
  const auto disk = generate(8, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto report = verify_layer_invariants(disk);
    benchmark::DoNotOptimize(report.all_pass());
  }
}
BENCHMARK(BM_VerifyInvariants)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_CanonicalCode(benchmark::State& state) {
  const auto disk = generate(7, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto code = canonical_code(disk.surface);
    benchmark::DoNotOptimize(code.bytes().size());
  }
}
BENCHMARK(BM_CanonicalCode)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Realize(benchmark::State& state) {
  const auto disk = generate(7, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto realized = realize(disk);
    benchmark::DoNotOptimize(realized.max_placement_deviation);
  }
}
BENCHMARK(BM_Realize)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_TriRoundTrip(benchmark::State& state) {
  const auto text = to_tri(generate(8, static_cast<int>(state.range(0))));
  for (auto _ : state) {
    auto disk = disk_from_tri(parse_tri(text));
    benchmark::DoNotOptimize(disk.radius);
  }
}
BENCHMARK(BM_TriRoundTrip)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
