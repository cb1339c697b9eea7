#include <benchmark/benchmark.h>

#include <random>

#include "mis/enumeration.hpp"
#include "mis/normal_forms.hpp"
#include "mis/operators.hpp"
#include "support/generators.hpp"

namespace {

using namespace mis;

struct Pair {
  Antichain a, b;
};

Pair make_pair(std::size_t size) {
  std::mt19937_64 rng(size);
  return {testing::random_large(rng, size), testing::random_large(rng, size)};
}

template <class Op>
void run(benchmark::State& state, Op op) {
  const Pair p = make_pair(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(op(p));
  state.SetComplexityN(state.range(0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Join(benchmark::State& s) { run(s, [](const Pair& p) { return join(p.a, p.b); }); }
void BM_Meet(benchmark::State& s) { run(s, [](const Pair& p) { return meet(p.a, p.b); }); }
void BM_OrderedMeet(benchmark::State& s) {
  run(s, [](const Pair& p) { return ordered_meet(p.a, p.b); });
}
void BM_Block(benchmark::State& s) { run(s, [](const Pair& p) { return block(p.a, p.b); }); }
void BM_PseudoDifference(benchmark::State& s) {
  run(s, [](const Pair& p) { return pseudo_difference(p.a, p.b); });
}
void BM_Containing(benchmark::State& s) {
  run(s, [](const Pair& p) { return filter_containment(p.a, p.b, ContainmentMode::containing); });
}
void BM_Leq(benchmark::State& state) {
  const Pair p = make_pair(static_cast<std::size_t>(state.range(0)));
  const Antichain above = join(p.a, p.b);  // full scan: A is always below A ∨ B
  for (auto _ : state) benchmark::DoNotOptimize(leq(p.a, above));
  state.SetComplexityN(state.range(0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
void BM_Implies(benchmark::State& s) {
  const Universe z = Universe::unbounded();
  run(s, [&](const Pair& p) { return relative_pseudo_complement(p.a, p.b, z); });
}

void BM_EnumerateAll(benchmark::State& state) {
  const auto n = static_cast<Position>(state.range(0));
  for (auto _ : state) {
    std::uint64_t count = 0;
    enumerate_all(n, [&](const Antichain&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}

#define MIS_SIZES Arg(3125)->Arg(25'000)->Arg(200'000)->Complexity(benchmark::oN)
BENCHMARK(BM_Join)->MIS_SIZES;
BENCHMARK(BM_Meet)->MIS_SIZES;
BENCHMARK(BM_OrderedMeet)->MIS_SIZES;
BENCHMARK(BM_Block)->MIS_SIZES;
BENCHMARK(BM_PseudoDifference)->MIS_SIZES;
BENCHMARK(BM_Containing)->MIS_SIZES;
BENCHMARK(BM_Leq)->MIS_SIZES;
BENCHMARK(BM_Implies)->MIS_SIZES;
BENCHMARK(BM_EnumerateAll)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
