#include <benchmark/benchmark.h>

#include <string>

#include "christol/christol.hpp"

namespace {

using christol::ExpansionMethod;

void BM_ExpandBaseline(benchmark::State& state) {
  const auto spec = christol::catalog_entry("central-binomial-3").spec();
  for (auto _ : state) benchmark::DoNotOptimize(christol::expand_branch(spec, state.range(0), ExpansionMethod::kBaseline));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExpandBaseline)->RangeMultiplier(4)->Range(256, 4096)->Complexity();

void BM_ExpandNewton(benchmark::State& state) {
  const auto spec = christol::catalog_entry("central-binomial-3").spec();
  for (auto _ : state) benchmark::DoNotOptimize(christol::expand_branch(spec, state.range(0), ExpansionMethod::kNewton));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExpandNewton)->RangeMultiplier(4)->Range(256, 1 << 16)->Complexity();

void BM_Multiply(benchmark::State& state) {
  const christol::Prime p(7);
  std::vector<christol::Residue> a(state.range(0)), b(state.range(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] = (i * 5 + 1) % 7;
    b[i] = (i * 3 + 2) % 7;
  }
  const christol::TruncatedSeries f(p, a), g(p, b);
  for (auto _ : state) benchmark::DoNotOptimize(christol::multiply(f, g));
}
BENCHMARK(BM_Multiply)->RangeMultiplier(8)->Range(64, 1 << 18);

void BM_OrbitClosure(benchmark::State& state, const char* name) {
  const auto spec = christol::catalog_entry(name).spec();
  for (auto _ : state) benchmark::DoNotOptimize(christol::orbit_closure(spec));
}
BENCHMARK_CAPTURE(BM_OrbitClosure, thue_morse, "thue-morse")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_OrbitClosure, rudin_shapiro, "rudin-shapiro")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_OrbitClosure, central_binomial_5, "central-binomial-5")->Unit(benchmark::kMillisecond);

void BM_BuildDfao(benchmark::State& state, const char* name) {
  const auto spec = christol::catalog_entry(name).spec();
  for (auto _ : state) benchmark::DoNotOptimize(christol::build_dfao(spec));
}
BENCHMARK_CAPTURE(BM_BuildDfao, thue_morse, "thue-morse")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BuildDfao, central_binomial_3, "central-binomial-3")->Unit(benchmark::kMillisecond);

void BM_QueryLongDecimal(benchmark::State& state) {
  const auto machine = christol::minimize(christol::build_dfao(christol::catalog_entry("thue-morse").spec()));
  std::string n(state.range(0), '7');
  n.front() = '1';
  for (auto _ : state) benchmark::DoNotOptimize(christol::query(machine, n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_QueryLongDecimal)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

}  // namespace

BENCHMARK_MAIN();
