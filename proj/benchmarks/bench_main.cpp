#include <benchmark/benchmark.h>

#include <random>

#include "soergel/dual.hpp"
#include "soergel/formal.hpp"
#include "soergel/hecke.hpp"
#include "soergel/qmatrix.hpp"
#include "soergel/soergel.hpp"

using namespace soergel;

static void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> e(-9, 9);
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(e(rng));
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16)->Arg(32);

static void BM_KlBasis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    HeckeAlgebra h(n);
    benchmark::DoNotOptimize(h.rank());
  }
}
BENCHMARK(BM_KlBasis)->Arg(3)->Arg(4)->Arg(5);

static void BM_BottSamelson(benchmark::State& state) {
  SoergelCategory cat(4);
  const Word w = Word::parse(4, "1,2,3,2,1");
  for (auto _ : state) benchmark::DoNotOptimize(cat.bott_samelson(w));
}
BENCHMARK(BM_BottSamelson);

static void BM_DecomposeSearch(benchmark::State& state) {
  SoergelCategory cat(3);
  const GradedModule m = cat.bott_samelson(Word::parse(3, "1,2,1,2"));
  for (auto _ : state) benchmark::DoNotOptimize(cat.decompose_search(m));
}
BENCHMARK(BM_DecomposeSearch);

static void BM_HomCharacter(benchmark::State& state) {
  SoergelCategory cat(3);
  const GradedModule& d = cat.indecomposable(WeylElement::longest(3));
  for (auto _ : state) benchmark::DoNotOptimize(cat.hom_character(d, d));
}
BENCHMARK(BM_HomCharacter);

// S3: dim A = 77.
static void BM_Koszulity(benchmark::State& state) {
  SoergelCategory cat(3);
  const dual::DualAlgebra a(cat);
  for (auto _ : state) benchmark::DoNotOptimize(dual::koszulity_check(a));
}
BENCHMARK(BM_Koszulity);

static void BM_SquareCheck(benchmark::State& state) {
  const formal::FormalCategory f(3);
  std::mt19937_64 rng(7);
  for (auto _ : state) {
    const auto x = f.random_complex(formal::Side::kMix, rng);
    benchmark::DoNotOptimize(f.square_check(x));
  }
}
BENCHMARK(BM_SquareCheck);

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
