#include <benchmark/benchmark.h>

#include "schroder/schroder.hpp"

namespace {

using namespace schroder;

void BM_GenerateLevel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gen::count(gen::schroder_words(n)));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_GenerateLevel)->DenseRange(4, 8)->Complexity();

void BM_Contains(benchmark::State& state) {
  const SchroderWord host = realize({PatternFamily::Kind::UdK, 512});
  const SchroderWord pat = realize({PatternFamily::Kind::UkDk, 256});
  for (auto _ : state) {
    benchmark::DoNotOptimize(contains(host, pat));
  }
}
BENCHMARK(BM_Contains);

void BM_AvoidersBrute(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SchroderWord pat = SchroderWord::parse("UDUD");
  for (auto _ : state) {
    benchmark::DoNotOptimize(avoiders_brute(n, pat));
  }
}
BENCHMARK(BM_AvoidersBrute)->DenseRange(5, 7);

void BM_CoveredOracle(benchmark::State& state) {
  const SchroderWord w = SchroderWord::parse("UUDUHUDDDHHUHUDHD");
  for (auto _ : state) {
    benchmark::DoNotOptimize(covered_set(w));
  }
}
BENCHMARK(BM_CoveredOracle);

void BM_CoveredFormula(benchmark::State& state) {
  const SchroderWord w = SchroderWord::parse("UUDUHUDDDHHUHUDHD");
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_covered_formula(stats(w)));
  }
}
BENCHMARK(BM_CoveredFormula);

void BM_CoveringOracle(benchmark::State& state) {
  const SchroderWord w = SchroderWord::parse("UUDUHUDDDHHUHUDHD");
  for (auto _ : state) {
    benchmark::DoNotOptimize(covering_set(w));
  }
}
BENCHMARK(BM_CoveringOracle);

void BM_FamilyFormulaH2Ud(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(counting::count_avoid_h2ud(n, 3));
  }
}
BENCHMARK(BM_FamilyFormulaH2Ud)->Arg(50)->Arg(200);

void BM_MobiusSmallInterval(benchmark::State& state) {
  const SchroderWord bottom;
  const SchroderWord top = SchroderWord::parse("UHUDD");
  for (auto _ : state) {
    benchmark::DoNotOptimize(mobius(bottom, top));
  }
}
BENCHMARK(BM_MobiusSmallInterval);

}  // namespace

BENCHMARK_MAIN();
