#include <benchmark/benchmark.h>

#include "weylchar/growth.hpp"
#include "weylchar/morphism.hpp"

using namespace weylchar;

static void BM_KernelTriangular(benchmark::State& state) {
  const AlgebraSignature sig(1, Prime(2));
  const auto x = WeylElement::generator(sig, Generator::x(1));
  const auto y = WeylElement::generator(sig, Generator::y(1));
  const WeylEndomorphism phi(sig, {x + pow(y, 3)}, {y});
  const auto bound = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto report = kernel_basis(phi, bound);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_KernelTriangular)->Arg(4)->Arg(8);

static void BM_SpanFullGenerators(benchmark::State& state) {
  const AlgebraSignature sig(2, Prime(2));
  std::vector<WeylElement> gens;
  for (int i = 1; i <= 2; ++i) {
    gens.push_back(WeylElement::generator(sig, Generator::x(i)));
    gens.push_back(WeylElement::generator(sig, Generator::y(i)));
  }
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto table = span_iterate(gens, N);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_SpanFullGenerators)->Arg(8)->Arg(12);

BENCHMARK_MAIN();
