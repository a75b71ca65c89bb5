#include "tikreg/kernels.hpp"

#include <gtest/gtest.h>
#include <omp.h>

#include <cmath>
#include <random>
#include <vector>

namespace k = tikreg::kernels;

namespace {

std::vector<double> random_values(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST(Kernels, HandValues) {
  const std::vector<double> a{1, 2, 3, 4};  // [[1,2],[3,4]]
  const std::vector<double> x{1, 1};
  std::vector<double> out(2);
  k::serial::gemv(a, 2, 2, x, out);
  EXPECT_EQ(out, (std::vector<double>{3, 7}));
  k::serial::gemv_transposed(a, 2, 2, std::vector<double>{1, 0}, out);
  EXPECT_EQ(out, (std::vector<double>{1, 2}));

  // kernel (1, 2, 0) on (1, 0, 0) reproduces the kernel; the adjoint reverses it
  const std::vector<double> kernel{1, 2, 0};
  std::vector<double> conv(3);
  k::serial::circular_convolve(kernel, std::vector<double>{1, 0, 0}, conv);
  EXPECT_EQ(conv, (std::vector<double>{1, 2, 0}));
  k::serial::circular_correlate(kernel, std::vector<double>{1, 0, 0}, conv);
  EXPECT_EQ(conv, (std::vector<double>{1, 0, 2}));

  EXPECT_DOUBLE_EQ(k::serial::dot(std::vector<double>{1, 2, 3}, std::vector<double>{4, 5, 6}), 32.0);
}

TEST(Kernels, ParallelMatchesSerial) {
  for (std::size_t n : {1u, 7u, 300u, 1000u}) {
    const auto a = random_values(n * n, 1);
    const auto x = random_values(n, 2);
    std::vector<double> s(n), p(n);

    k::serial::gemv(a, n, n, x, s);
    k::parallel::gemv(a, n, n, x, p);
    EXPECT_EQ(s, p) << "gemv n=" << n;  // same per-row summation order

    k::serial::gemv_transposed(a, n, n, x, s);
    k::parallel::gemv_transposed(a, n, n, x, p);
    EXPECT_EQ(s, p) << "gemv_transposed n=" << n;

    k::serial::circular_convolve(x, x, s);
    k::parallel::circular_convolve(x, x, p);
    EXPECT_EQ(s, p);
    k::serial::circular_correlate(x, x, s);
    k::parallel::circular_correlate(x, x, p);
    EXPECT_EQ(s, p);
  }
  for (std::size_t n : {1u, 4095u, 4096u, 4097u, 100000u}) {
    const auto x = random_values(n, 3), y = random_values(n, 4);
    const double s = k::serial::dot(x, y);
    const double p = k::parallel::dot(x, y);
    EXPECT_NEAR(s, p, 1e-13 * static_cast<double>(n)) << "dot n=" << n;
  }
}

TEST(Kernels, ParallelAxpyMatchesSerial) {
  const auto x = random_values(50000, 5);
  auto ys = random_values(50000, 6);
  auto yp = ys;
  k::serial::axpy(0.3, x, ys);
  k::parallel::axpy(0.3, x, yp);
  EXPECT_EQ(max_abs_diff(ys, yp), 0.0);
}

TEST(Kernels, ResultsIndependentOfThreadCount) {
  const std::size_t n = 300;
  const auto a = random_values(n * n, 7);
  const auto x = random_values(n, 8);
  const auto big = random_values(200000, 9);

  auto run = [&](int threads) {
    omp_set_num_threads(threads);
    std::vector<double> out(n), outt(n);
    k::parallel::gemv(a, n, n, x, out);
    k::parallel::gemv_transposed(a, n, n, x, outt);
    out.insert(out.end(), outt.begin(), outt.end());
    out.push_back(k::parallel::dot(big, big));
    return out;
  };
  const auto one = run(1);
  const auto three = run(3);
  const auto four = run(4);
  EXPECT_EQ(one, three);
  EXPECT_EQ(one, four);
}
