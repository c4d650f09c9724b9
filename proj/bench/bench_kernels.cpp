#include <benchmark/benchmark.h>

#include "kac/weakhopf.hpp"

using namespace kac;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

void label(benchmark::State& s) { s.SetLabel(s.range(0) == 0 ? "serial" : "openmp"); }

void BM_SolveQ2(benchmark::State& s) {
  auto hp = make_pair(builtin_algebra("group:Z3"));
  for (auto _ : s) benchmark::DoNotOptimize(solve_qspace(hp, q_geometry(3, 2), exec_of(s)).dim());
  label(s);
}

void BM_CommutantS3Chain(benchmark::State& s) {
  auto hp = make_pair(builtin_algebra("group:S3"));
  for (auto _ : s) {
    Chain<Cyclo> c(hp, 1, 3);
    benchmark::DoNotOptimize(commutant_basis(c, chain_generators(c, 1, 2), {}, exec_of(s)).size());
  }
  label(s);
}

void BM_AlphaImage(benchmark::State& s) {
  auto hp = make_pair(builtin_algebra("group:Z2"));
  AdjointIntegral<Cyclo> P(hp, q_geometry(3, 2));
  for (auto _ : s) benchmark::DoNotOptimize(adjoint_integral_image(P, exec_of(s)).size());
  label(s);
}

void BM_BuildWeakKac(benchmark::State& s) {
  auto hp = make_pair(builtin_algebra("group:Z3"));
  for (auto _ : s) benchmark::DoNotOptimize(WeakKac<Cyclo>(hp, 3, exec_of(s)).dim());
  label(s);
}

void BM_BuildWeakKacFloat(benchmark::State& s) {
  auto hp = make_pair(to_float(builtin_algebra("group:Z2")));
  for (auto _ : s) benchmark::DoNotOptimize(WeakKac<cplx>(hp, 4, exec_of(s)).dim());
  label(s);
}

}  // namespace

BENCHMARK(BM_SolveQ2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CommutantS3Chain)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AlphaImage)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildWeakKac)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildWeakKacFloat)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
