#include <jacder/jacder.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace jacder;

const BivarPoly X = BivarPoly::x();
const BivarPoly Y = BivarPoly::y();

BivarPoly dense(int degree) {
  BivarPoly p;
  long c = 1;
  for (const auto& m : monomials_up_to(degree)) p.add_term(m, Rational(c++ % 7 - 3));
  return p;
}

void BM_PolyMultiply(benchmark::State& state) {
  const BivarPoly a = dense(static_cast<int>(state.range(0)));
  const BivarPoly b = dense(static_cast<int>(state.range(0)) - 1);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMultiply)->Arg(4)->Arg(8)->Arg(16);

void BM_Bracket(benchmark::State& state) {
  const Derivation a{dense(6), dense(5)};
  const Derivation b = jacobian_derivation(dense(7));
  for (auto _ : state) benchmark::DoNotOptimize(bracket(a, b));
}
BENCHMARK(BM_Bracket);

void BM_Decompose(benchmark::State& state) {
  const BivarPoly p = X * X * Y + scale(Y, 3) - X;
  BivarPoly f = p;
  for (int i = 1; i < state.range(0); ++i) f = f * p;
  for (auto _ : state) benchmark::DoNotOptimize(decompose(f));
}
BENCHMARK(BM_Decompose)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_CentralizerExample(benchmark::State& state) {
  const BivarPoly g = X * X * X * (X - BivarPoly(1)) * Y * Y;
  for (auto _ : state) benchmark::DoNotOptimize(centralizer_solve(g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CentralizerExample)->Arg(6)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_EigenSearch(benchmark::State& state) {
  const BivarPoly f = X * (X - BivarPoly(1)) * Y;
  for (auto _ : state) benchmark::DoNotOptimize(eigen_search(f, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EigenSearch)->Arg(3)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
