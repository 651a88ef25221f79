#include <benchmark/benchmark.h>

#include "gca/algebroids.hpp"
#include "gca/random.hpp"

namespace {

using namespace gca;

void BM_poisson(benchmark::State& state) {
  OddContact oc = odd_contact(int(state.range(0)));
  RandomPolyGen gen(oc.jacobi.phase.chart(), 7);
  Poly f = gen.poly(8, 3), g = gen.poly(8, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(poisson(f, g, oc.jacobi.phase));
}
BENCHMARK(BM_poisson)->Arg(1)->Arg(2)->Arg(3);

void BM_odd_jacobi_bracket(benchmark::State& state) {
  OddContact oc = odd_contact(int(state.range(0)));
  RandomPolyGen gen(oc.spec.bundle.pistar_chart(), 11);
  Poly x = gen.poly(6, 2).on_chart(oc.jacobi.phase.chart());
  Poly y = gen.poly(6, 2).on_chart(oc.jacobi.phase.chart());
  for (auto _ : state)
    benchmark::DoNotOptimize(odd_jacobi_bracket(oc.jacobi, x, y));
}
BENCHMARK(BM_odd_jacobi_bracket)->Arg(1)->Arg(2)->Arg(3);

void BM_verify_odd_jacobi(benchmark::State& state) {
  OddContact oc = odd_contact(int(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_odd_jacobi(oc.jacobi).pass());
}
BENCHMARK(BM_verify_odd_jacobi)->Arg(1)->Arg(2)->Arg(3);

void BM_transport(benchmark::State& state) {
  OddContact oc = odd_contact(int(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(transport(oc.jacobi, oc.spec.bundle).q);
}
BENCHMARK(BM_transport)->Arg(1)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
