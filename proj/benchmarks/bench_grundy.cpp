#include <benchmark/benchmark.h>

#include "wythoff/beatty.hpp"
#include "wythoff/grundy.hpp"
#include "wythoff/rulesets.hpp"

namespace {

using wythoff::RulesetSpec;

void table(benchmark::State& state, const RulesetSpec& rs) {
  const auto bound = static_cast<wythoff::Pile>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wythoff::grundy_table(rs, bound));
  }
  state.SetComplexityN(state.range(0));
}

void BM_Wythoff(benchmark::State& s) { table(s, RulesetSpec::wythoff()); }
void BM_Wk3(benchmark::State& s) { table(s, RulesetSpec::wk(3)); }
void BM_Wkl(benchmark::State& s) { table(s, RulesetSpec::wkl(2, 5)); }
void BM_Tk2(benchmark::State& s) { table(s, RulesetSpec::tk(2)); }

void BM_Beatty(benchmark::State& state) {
  for (auto _ : state) {
    std::uint64_t sum = 0;
    for (std::uint64_t n = 0; n < 10'000; ++n) sum += wythoff::beatty::a_n(n);
    benchmark::DoNotOptimize(sum);
  }
}

}  // namespace

BENCHMARK(BM_Wythoff)->RangeMultiplier(2)->Range(50, 800)->Complexity();
BENCHMARK(BM_Wk3)->RangeMultiplier(2)->Range(50, 400);
BENCHMARK(BM_Wkl)->RangeMultiplier(2)->Range(50, 400);
BENCHMARK(BM_Tk2)->RangeMultiplier(2)->Range(50, 400);
BENCHMARK(BM_Beatty);

BENCHMARK_MAIN();
