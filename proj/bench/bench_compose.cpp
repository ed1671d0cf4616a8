#include <benchmark/benchmark.h>

#include "halphen/birational.hpp"
#include "halphen/parse.hpp"

using namespace halphen;

namespace {

const CubicSurface& surface() {
  static const CubicSurface X(parse_poly("x^3 + y^3 + z^3 + 2*t^3"));
  return X;
}

const RationalMap& geiser_map() {
  static const RationalMap g = geiser(surface(), ClosedPoint::rational({1, 1, 0, -1})).map;
  return g;
}

const RationalMap& bertini_map() {
  static const RationalMap b =
      bertini(surface(), ClosedPoint::from_ideal(PolyIdeal(parse_poly_list(
                             {"z^2 - 31/4*z*t - 5/4*t^2", "x + 3/2*z + 3/2*t", "y - 3/2*z - 1/2*t"})))).map;
  return b;
}

template <auto Kernel>
void run(benchmark::State& state, const RationalMap& f, const RationalMap& g) {
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(f.equations(), g.equations()));
}

void BM_GeiserSerial(benchmark::State& s) { run<compose_equations_serial>(s, geiser_map(), geiser_map()); }
void BM_GeiserParallel(benchmark::State& s) { run<compose_equations_parallel>(s, geiser_map(), geiser_map()); }
void BM_BertiniGeiserSerial(benchmark::State& s) { run<compose_equations_serial>(s, bertini_map(), geiser_map()); }
void BM_BertiniGeiserParallel(benchmark::State& s) { run<compose_equations_parallel>(s, bertini_map(), geiser_map()); }

}  // namespace

BENCHMARK(BM_GeiserSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GeiserParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BertiniGeiserSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BertiniGeiserParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
