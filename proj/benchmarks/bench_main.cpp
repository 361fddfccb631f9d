#include <benchmark/benchmark.h>

#include "antsel/analysis.hpp"
#include "antsel/montecarlo.hpp"
#include "antsel/selection.hpp"
#include "antsel/specfun.hpp"

namespace {

using namespace antsel;

SystemParams params_for(int n, int mk) {
  ScenarioConfig c;
  c.n_bs = n;
  c.n_ue1 = c.n_ue2 = mk;
  c.ps_dbm = 30.0;
  return derive_params(c);
}

// Selection cost as the BS array grows; M = K = 4.
template <typename Select>
void run_selection(benchmark::State& state, Select select) {
  const SystemParams p = params_for(static_cast<int>(state.range(0)), 4);
  std::vector<ChannelRealization> pool;
  for (std::uint64_t t = 0; t < 64; ++t) pool.push_back(sample_realization(p, t, 1));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(select(pool[i++ & 63], p));
  }
  state.SetComplexityN(state.range(0));
}

void BM_ExhaustiveSearch(benchmark::State& s) {
  run_selection(s, [](const ChannelRealization& ch, const SystemParams& p) {
    return exhaustive_search(ch, p);
  });
}
void BM_AiaSelect(benchmark::State& s) {
  run_selection(s, [](const ChannelRealization& ch, const SystemParams&) { return aia_select(ch); });
}
void BM_A3Select(benchmark::State& s) {
  run_selection(s, [](const ChannelRealization& ch, const SystemParams&) { return a3_select(ch); });
}
BENCHMARK(BM_ExhaustiveSearch)->RangeMultiplier(2)->Range(2, 64)->Complexity();
BENCHMARK(BM_AiaSelect)->RangeMultiplier(2)->Range(2, 64)->Complexity();
BENCHMARK(BM_A3Select)->RangeMultiplier(2)->Range(2, 64)->Complexity();

void BM_ExpintEi(benchmark::State& state) {
  const double x = -static_cast<double>(state.range(0)) / 4.0;
  for (auto _ : state) benchmark::DoNotOptimize(expint_ei(x));
}
BENCHMARK(BM_ExpintEi)->Arg(1)->Arg(8)->Arg(40)->Arg(400);

void BM_Chi(benchmark::State& state) {
  double x = 1e3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(chi(x, 0.4, 1e9));
    x = x * 1.0001 + 1.0;
    if (x > 1e9) x = 1e3;
  }
}
BENCHMARK(BM_Chi);

void BM_AvgSumRateAia(benchmark::State& state) {
  const SystemParams p = params_for(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(avg_sum_rate_aia(p));
}
BENCHMARK(BM_AvgSumRateAia)->DenseRange(2, 8, 2);

void BM_AvgSumRateA3(benchmark::State& state) {
  const SystemParams p = params_for(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(avg_sum_rate_a3(p));
}
BENCHMARK(BM_AvgSumRateA3)->DenseRange(2, 8, 2);

}  // namespace

BENCHMARK_MAIN();
