#include <benchmark/benchmark.h>

#include "weylchar/element.hpp"

using namespace weylchar;

static void BM_PBWProduct(benchmark::State& state) {
  const AlgebraSignature sig(2, Prime(5));
  const auto d = static_cast<std::uint64_t>(state.range(0));
  const auto a = pow(WeylElement::generator(sig, Generator::x(1)) +
                         WeylElement::generator(sig, Generator::y(2)),
                     d);
  const auto b = pow(WeylElement::generator(sig, Generator::y(1)) +
                         WeylElement::generator(sig, Generator::x(2)),
                     d);
  for (auto _ : state) {
    auto c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_PBWProduct)->Arg(4)->Arg(8)->Arg(16);

static void BM_Power(benchmark::State& state) {
  const AlgebraSignature sig(1, Prime(3));
  const auto yx = WeylElement::generator(sig, Generator::y(1)) *
                  WeylElement::generator(sig, Generator::x(1));
  const auto k = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto c = pow(yx, k);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_Power)->Arg(9)->Arg(27);

static void BM_Commutator(benchmark::State& state) {
  const AlgebraSignature sig(2, Prime(3));
  const auto a = pow(WeylElement::generator(sig, Generator::x(1)) +
                         WeylElement::generator(sig, Generator::y(1)),
                     6);
  const auto b = pow(WeylElement::generator(sig, Generator::x(2)) +
                         WeylElement::generator(sig, Generator::y(1)),
                     6);
  for (auto _ : state) {
    auto c = commutator(a, b);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_Commutator);

BENCHMARK_MAIN();
