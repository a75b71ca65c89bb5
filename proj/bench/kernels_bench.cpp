// Serial reference vs OpenMP kernels, plus one end-to-end principle solve.
//
//   OMP_NUM_THREADS=4 ./build/bench/kernels_bench

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "tikreg/discrepancy.hpp"
#include "tikreg/gallery.hpp"
#include "tikreg/kernels.hpp"

namespace {

std::vector<double> random_values(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

template <auto Kernel>
void BM_Dot(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto x = random_values(n, 1), y = random_values(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(x, y));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

template <auto Kernel>
void BM_Gemv(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_values(n * n, 3), x = random_values(n, 4);
  std::vector<double> out(n);
  for (auto _ : state) {
    Kernel(a, n, n, x, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n));
}

template <auto Kernel>
void BM_Convolve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto k = random_values(n, 5), x = random_values(n, 6);
  std::vector<double> out(n);
  for (auto _ : state) {
    Kernel(k, x, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n));
}

void BM_SolveHilbert(benchmark::State& state) {
  const auto problem = tikreg::make_hilbert_problem(static_cast<std::size_t>(state.range(0)));
  const auto noisy = tikreg::make_noisy(problem, 1e-3, 7, tikreg::DirectionPolicy::random_unit);
  tikreg::DiscrepancyConfig cfg;
  cfg.solver_mode = state.range(1) ? tikreg::SolverMode::certified_approximate
                                   : tikreg::SolverMode::exact;
  for (auto _ : state)
    benchmark::DoNotOptimize(tikreg::solve_for_epsilon(problem.op, noisy.f_delta, 1e-3, cfg));
}

namespace k = tikreg::kernels;

BENCHMARK(BM_Dot<k::serial::dot>)->RangeMultiplier(16)->Range(1 << 10, 1 << 22);
BENCHMARK(BM_Dot<k::parallel::dot>)->RangeMultiplier(16)->Range(1 << 10, 1 << 22);
BENCHMARK(BM_Gemv<k::serial::gemv>)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_Gemv<k::parallel::gemv>)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_Gemv<k::serial::gemv_transposed>)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_Gemv<k::parallel::gemv_transposed>)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_Convolve<k::serial::circular_convolve>)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_Convolve<k::parallel::circular_convolve>)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_SolveHilbert)->Args({50, 0})->Args({50, 1})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
