#include <benchmark/benchmark.h>

#include <cstdint>
#include <memory>
#include <random>

#include "realspace/advdfa.hpp"
#include "realspace/builtins.hpp"
#include "realspace/meter.hpp"
#include "realspace/pairing.hpp"
#include "realspace/ratarith.hpp"
#include "realspace/tally.hpp"

namespace {

using namespace realspace;

void BM_EvalSqrt2(benchmark::State& state) {
  auto g = make_builtin("sqrt2");
  auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    SpaceMeter meter;
    benchmark::DoNotOptimize(g->eval(n, meter));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EvalSqrt2)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_EvalRational(benchmark::State& state) {
  auto g = make_rational_gen(make_rational(355, 113), 10);
  auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    SpaceMeter meter;
    benchmark::DoNotOptimize(g->eval(n, meter));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EvalRational)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_EvalPrimes(benchmark::State& state) {
  auto g = make_builtin("primes");
  auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    SpaceMeter meter;
    benchmark::DoNotOptimize(g->eval(n, meter));
  }
}
BENCHMARK(BM_EvalPrimes)->RangeMultiplier(4)->Range(16, 1024);

void BM_FakeInputAdapter(benchmark::State& state) {
  auto g = make_builtin("thue-morse");
  auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    SpaceMeter meter;
    benchmark::DoNotOptimize(g->eval_fake_input(n, meter));
  }
}
BENCHMARK(BM_FakeInputAdapter)->RangeMultiplier(4)->Range(16, 1024);

void BM_PairRoundTrip(benchmark::State& state) {
  std::mt19937_64 rng(7);
  for (auto _ : state) {
    std::uint64_t i = rng() % 1000000, j = rng() % 1000000;
    std::uint64_t a, b;
    unpair(pair(i, j), a, b);
    benchmark::DoNotOptimize(a + b);
  }
}
BENCHMARK(BM_PairRoundTrip);

void BM_IsqrtFast(benchmark::State& state) {
  std::mt19937_64 rng(7);
  for (auto _ : state) benchmark::DoNotOptimize(isqrt_fast(rng()));
}
BENCHMARK(BM_IsqrtFast);

void BM_TallyReconstruct(benchmark::State& state) {
  auto g = make_builtin("golden");
  TallyOracle oracle = tally_oracle(*g);
  auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    SpaceMeter meter;
    benchmark::DoNotOptimize(digits_from_tally(oracle, n, meter, TallyScanMode::Fast));
  }
}
BENCHMARK(BM_TallyReconstruct)->DenseRange(8, 32, 8);

void BM_DetectCycle(benchmark::State& state) {
  std::mt19937_64 rng(20260823);
  AdvicedDFA machine = random_machine(rng, 6, 3);
  auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(detect_cycle(machine, n));
}
BENCHMARK(BM_DetectCycle)->Arg(16)->Arg(64)->Arg(256);

void BM_LowestTerms(benchmark::State& state) {
  std::mt19937_64 rng(7);
  for (auto _ : state) {
    auto p = static_cast<std::int64_t>(rng() % 100000) + 1;
    auto q = static_cast<std::int64_t>(rng() % 100000) + 1;
    benchmark::DoNotOptimize(rat_lowest_terms(make_rational(p, q)));
  }
}
BENCHMARK(BM_LowestTerms);

}  // namespace

BENCHMARK_MAIN();
