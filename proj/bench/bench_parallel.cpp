#include <benchmark/benchmark.h>

#include <random>

#include "pcf/convergence.hpp"
#include "pcf/loci.hpp"
#include "pcf/radical03.hpp"

using namespace pcf;

namespace {

Exec execOf(const benchmark::State& state) { return state.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_Locus12Scan(benchmark::State& state) {
  const QuadPoly F{1, -12, 8};
  for (auto _ : state) benchmark::DoNotOptimize(locus12Scan(F, Prime(3), {400, 3}, 8, execOf(state)));
  label(state);
}

void BM_Locus21Scan(benchmark::State& state) {
  const QuadPoly F{1, 0, -10};
  for (auto _ : state) benchmark::DoNotOptimize(locus21(F, Prime(3), {200, 2}, 8, execOf(state)));
  label(state);
}

void BM_Search03(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(search03(10, {.maxIndex = 60}, execOf(state)));
  label(state);
}

void BM_ClassifyBatch(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> m(-20, 20), j(0, 2);
  std::vector<PCF> batch;
  for (int i = 0; i < 20000; ++i) {
    std::vector<Rational> per;
    for (int k = 0; k < 3; ++k) per.emplace_back(Integer(m(rng)), ipow(Integer(3), static_cast<unsigned long>(j(rng))));
    batch.emplace_back(Prime(3), std::vector<Rational>{}, per);
  }
  for (auto _ : state) benchmark::DoNotOptimize(classifyBatch(batch, execOf(state)));
  label(state);
}

}  // namespace

BENCHMARK(BM_Locus12Scan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Locus21Scan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Search03)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassifyBatch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
