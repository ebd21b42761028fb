#include <benchmark/benchmark.h>

#include "octoprime/gl2search.hpp"
#include "octoprime/hom_search.hpp"
#include "octoprime/perm_group.hpp"
#include "octoprime/zoo.hpp"

using namespace octoprime;

namespace {

PermGroup const &sample_group()
{
  static PermGroup const g = [] {
    auto h = zoo::make(zoo::GroupName::H_pn, {11, 2});
    h.elements();
    return h;
  }();
  return g;
}

Exec exec_of(benchmark::State const &state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void BM_ElementOrders(benchmark::State &state)
{
  auto const &t = sample_group().elements();
  for (auto _ : state) {
    auto v = state.range(0) ? element_orders_parallel(t) : element_orders_serial(t);
    benchmark::DoNotOptimize(v.data());
  }
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}

void BM_ConjugacyClasses(benchmark::State &state)
{
  auto const &t = sample_group().elements();
  for (auto _ : state) {
    auto c = state.range(0) ? conjugacy_classes_parallel(t) : conjugacy_classes_serial(t);
    benchmark::DoNotOptimize(&c);
  }
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}

void BM_SearchSpecialAllPairs(benchmark::State &state)
{
  for (auto _ : state) {
    auto r = gl2search::search_special(79, true, exec_of(state));
    benchmark::DoNotOptimize(r.solutions.data());
  }
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}

void BM_SearchOrder4q(benchmark::State &state)
{
  for (auto _ : state) {
    auto r = gl2search::search_order4q(71, 1000000, exec_of(state));
    benchmark::DoNotOptimize(r.solutions.data());
  }
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}

void BM_HomCandidates(benchmark::State &state)
{
  auto const &g = sample_group();
  BudgetMeter meter(Budget{});
  HomSearch search(g, g, meter);
  std::vector<std::uint32_t> prefix{search.generators().front()};
  for (auto _ : state) {
    auto c = search.candidates(prefix, exec_of(state));
    benchmark::DoNotOptimize(c.data());
  }
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}

} // namespace

BENCHMARK(BM_ElementOrders)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConjugacyClasses)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchSpecialAllPairs)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchOrder4q)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HomCandidates)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
