#include <benchmark/benchmark.h>

#include "alcove/annex.hpp"
#include "alcove/bruhat.hpp"
#include "alcove/galleries.hpp"
#include "alcove/render.hpp"
#include "alcove/verify.hpp"

using namespace alcove;

namespace {

const char* kTags[] = {"A2~", "C2~", "G2~"};

void BM_Enumerate(benchmark::State& state) {
  const GroupContext ctx(kTags[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_by_length(ctx, static_cast<int>(state.range(1))));
  state.SetLabel(kTags[state.range(0)]);
}
BENCHMARK(BM_Enumerate)->ArgsProduct({{0, 1, 2}, {8, 16}});

void BM_Length(benchmark::State& state) {
  const GroupContext ctx(kTags[state.range(0)]);
  const auto elems = enumerate_by_length(ctx, 12);
  for (auto _ : state) {
    int total = 0;
    for (const auto& x : elems) total += length(ctx, x);
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(static_cast<long>(state.iterations() * elems.size()));
  state.SetLabel(kTags[state.range(0)]);
}
BENCHMARK(BM_Length)->DenseRange(0, 2);

void BM_LeqPairs(benchmark::State& state) {
  const GroupContext ctx("A2~");
  const auto elems = enumerate_by_length(ctx, static_cast<int>(state.range(0)));
  const bool oracle = state.range(1) != 0;
  for (auto _ : state) {
    long n = 0;
    for (const auto& x : elems) {
      for (const auto& y : elems) n += oracle ? leq_oracle(ctx, x, y) : leq(ctx, x, y);
    }
    benchmark::DoNotOptimize(n);
  }
  state.SetLabel(oracle ? "oracle" : "lifting");
}
BENCHMARK(BM_LeqPairs)->ArgsProduct({{5, 7}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Shadow(benchmark::State& state) {
  const GroupContext ctx("A2~");
  const Element w = from_word(ctx, parse_word(ctx, "0120120120"));
  const bool foldings = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(foldings ? shadow_via_foldings(ctx, w) : shadow(ctx, w));
  state.SetLabel(foldings ? "foldings" : "bfs");
}
BENCHMARK(BM_Shadow)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_Annex(benchmark::State& state) {
  const GroupContext ctx(kTags[state.range(0)]);
  const Element w = from_word(ctx, parse_word(ctx, "0210201"));
  for (auto _ : state) benchmark::DoNotOptimize(annex(ctx, w));
  state.SetLabel(kTags[state.range(0)]);
}
BENCHMARK(BM_Annex)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

void BM_MainTheoremSweep(benchmark::State& state) {
  const GroupContext ctx(kTags[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(sweep_main_theorem(ctx, 6, 6));
  state.SetLabel(kTags[state.range(0)]);
}
BENCHMARK(BM_MainTheoremSweep)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_RenderAnnex(benchmark::State& state) {
  const GroupContext ctx("A2~");
  const Scene scene = annex_scene(ctx, annex(ctx, from_word(ctx, parse_word(ctx, "021020"))));
  for (auto _ : state) benchmark::DoNotOptimize(render_svg(ctx, scene));
}
BENCHMARK(BM_RenderAnnex)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
