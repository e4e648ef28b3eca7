// linked against benchmark::benchmark, not benchmark_main: the packaged main archive is LTO bytecode from another gcc
#include <benchmark/benchmark.h>

#include "monicgp/duality.hpp"
#include "monicgp/gallery.hpp"
#include "monicgp/homology.hpp"
#include "monicgp/sampling.hpp"

using namespace monicgp;

namespace {

Matrix random_matrix(const Field& f, std::size_t n, std::uint64_t seed) {
  Sampler s(seed);
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = s.scalar(f);
  return m;
}

void BM_RrefRational(benchmark::State& st) {
  Matrix m = random_matrix(Field::rationals(), st.range(0), 7);
  for (auto _ : st) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefRational)->Arg(8)->Arg(16)->Arg(32);

void BM_RrefPrime(benchmark::State& st) {
  Matrix m = random_matrix(Field::prime(101), st.range(0), 7);
  for (auto _ : st) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefPrime)->Arg(8)->Arg(16)->Arg(32);

void BM_HomSpaceLambda(benchmark::State& st) {
  AlgebraPtr a = lambda_q(Field::rationals(), Scalar(Field::rationals(), 2)).algebra;
  Module reg = regular(a, Side::Left);
  for (auto _ : st) benchmark::DoNotOptimize(HomSpace(reg, reg).dim());
}
BENCHMARK(BM_HomSpaceLambda);

void BM_ResolveSimple(benchmark::State& st) {
  AlgebraPtr a = lambda_q(Field::rationals(), Scalar(Field::rationals(), 2)).algebra;
  Module k = simples_and_projectives(a).simples.at(0);
  for (auto _ : st) benchmark::DoNotOptimize(resolve(k, st.range(0), true).computed());
}
BENCHMARK(BM_ResolveSimple)->Arg(2)->Arg(3);

void BM_ClassifyLambdaModule(benchmark::State& st) {
  LambdaModules lm = lambda_modules(Field::rationals(), Scalar(Field::rationals(), 2), Scalar(Field::rationals(), 0));
  for (auto _ : st) {
    clear_resolution_cache();
    benchmark::DoNotOptimize(classify(lm.m, 4, 1).torsionless);
  }
}
BENCHMARK(BM_ClassifyLambdaModule);

}  // namespace

BENCHMARK_MAIN();
