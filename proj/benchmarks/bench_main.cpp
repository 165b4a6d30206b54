#include <benchmark/benchmark.h>

#include "widthlab/certify.hpp"
#include "widthlab/packing.hpp"
#include "widthlab/prng.hpp"
#include "widthlab/solvers.hpp"
#include "widthlab/widths.hpp"

namespace {

using namespace widthlab;

RealVector sparse_rhs(const MeasurementMatrix& A, int s, std::uint64_t seed) {
  CounterRng rng(seed, "bench-x0");
  RealVector x = RealVector::Zero(A.cols());
  for (int i = 0; i < s; ++i) {
    x[static_cast<int>(rng.below(i, A.cols()))] = rng.gaussian(i);
  }
  return A.A * x;
}

void BM_l1_minimize(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const int m = N / 2;
  const MeasurementMatrix A = gaussian_matrix(m, N, 1);
  const RealVector y = sparse_rhs(A, m / 4, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(l1_minimize(A, y));
  }
}
BENCHMARK(BM_l1_minimize)->Arg(32)->Arg(64)->Arg(128)->Arg(256);

void BM_irls_half(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const MeasurementMatrix A = gaussian_matrix(N / 2, N, 3);
  const RealVector y = sparse_rhs(A, N / 8, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lp_minimize_irls(A, y, 0.5));
  }
}
BENCHMARK(BM_irls_half)->Arg(32)->Arg(64)->Arg(128);

void BM_exact_oracle(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const MeasurementMatrix A = gaussian_matrix(6, N, 5);
  const RealVector y = sparse_rhs(A, 2, 6);
  const ExactOracle oracle(A.A);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle.minimize(y, 0.5));
  }
}
BENCHMARK(BM_exact_oracle)->Arg(10)->Arg(12)->Arg(14);

void BM_rip_exhaustive_pairs(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const MeasurementMatrix A = gaussian_matrix(N / 4, N, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rip_constant(A, 2, RipMethod::exhaustive));
  }
}
BENCHMARK(BM_rip_exhaustive_pairs)->Arg(64)->Arg(128)->Arg(256);

void BM_nsp_exact_l1(benchmark::State& state) {
  const MeasurementMatrix A = gaussian_matrix(6, 12, 9);
  const int s = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_nsp(A, s, 1.0, NspMethod::exact_l1));
  }
}
BENCHMARK(BM_nsp_exact_l1)->Arg(1)->Arg(2);

void BM_greedy_packing(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy_packing(N, 4));
  }
}
BENCHMARK(BM_greedy_packing)->Arg(32)->Arg(64);

void BM_empirical_width_lower(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const MeasurementMatrix A = gaussian_matrix(N / 4, N, 11);
  WidthSearchOptions opts;
  opts.starts = 16;
  opts.iterations = 100;
  for (auto _ : state) {
    benchmark::DoNotOptimize(empirical_width_lower(A, 1.0, 2.0, opts));
  }
}
BENCHMARK(BM_empirical_width_lower)->Arg(64)->Arg(128)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
