#include "tikreg/kernels.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <vector>

namespace tikreg::kernels {

namespace serial {

double dot(std::span<const double> x, std::span<const double> y) {
  assert(x.size() == y.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) sum += x[i] * y[i];
  return sum;
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  assert(x.size() == y.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

void gemv(std::span<const double> a, std::size_t rows, std::size_t cols,
          std::span<const double> x, std::span<double> out) {
  assert(a.size() == rows * cols && x.size() == cols && out.size() == rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const double* row = a.data() + i * cols;
    double sum = 0.0;
    for (std::size_t j = 0; j < cols; ++j) sum += row[j] * x[j];
    out[i] = sum;
  }
}

void gemv_transposed(std::span<const double> a, std::size_t rows, std::size_t cols,
                     std::span<const double> x, std::span<double> out) {
  assert(a.size() == rows * cols && x.size() == rows && out.size() == cols);
  for (std::size_t j = 0; j < cols; ++j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rows; ++i) sum += a[i * cols + j] * x[i];
    out[j] = sum;
  }
}

void circular_convolve(std::span<const double> kernel, std::span<const double> x,
                       std::span<double> out) {
  const std::size_t n = kernel.size();
  assert(x.size() == n && out.size() == n);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) sum += kernel[(i + n - j) % n] * x[j];
    out[i] = sum;
  }
}

void circular_correlate(std::span<const double> kernel, std::span<const double> x,
                        std::span<double> out) {
  const std::size_t n = kernel.size();
  assert(x.size() == n && out.size() == n);
  for (std::size_t j = 0; j < n; ++j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += kernel[(i + n - j) % n] * x[i];
    out[j] = sum;
  }
}

}  // namespace serial

namespace parallel {

double dot(std::span<const double> x, std::span<const double> y) {
  assert(x.size() == y.size());
  const std::size_t n = x.size();
  const std::size_t blocks = (n + kDotBlock - 1) / kDotBlock;
  std::vector<double> partial(blocks, 0.0);
  const auto nb = static_cast<std::int64_t>(blocks);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < nb; ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kDotBlock;
    const std::size_t hi = std::min(n, lo + kDotBlock);
    double sum = 0.0;
    for (std::size_t i = lo; i < hi; ++i) sum += x[i] * y[i];
    partial[static_cast<std::size_t>(b)] = sum;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  assert(x.size() == y.size());
  const auto n = static_cast<std::int64_t>(x.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void gemv(std::span<const double> a, std::size_t rows, std::size_t cols,
          std::span<const double> x, std::span<double> out) {
  assert(a.size() == rows * cols && x.size() == cols && out.size() == rows);
  const auto nr = static_cast<std::int64_t>(rows);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < nr; ++i) {
    const double* row = a.data() + static_cast<std::size_t>(i) * cols;
    double sum = 0.0;
    for (std::size_t j = 0; j < cols; ++j) sum += row[j] * x[j];
    out[i] = sum;
  }
}

void gemv_transposed(std::span<const double> a, std::size_t rows, std::size_t cols,
                     std::span<const double> x, std::span<double> out) {
  assert(a.size() == rows * cols && x.size() == rows && out.size() == cols);
  const auto nc = static_cast<std::int64_t>(cols);
#pragma omp parallel for schedule(static)
  for (std::int64_t j = 0; j < nc; ++j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rows; ++i) sum += a[i * cols + static_cast<std::size_t>(j)] * x[i];
    out[j] = sum;
  }
}

void circular_convolve(std::span<const double> kernel, std::span<const double> x,
                       std::span<double> out) {
  const std::size_t n = kernel.size();
  assert(x.size() == n && out.size() == n);
  const auto nn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t ii = 0; ii < nn; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) sum += kernel[(i + n - j) % n] * x[j];
    out[i] = sum;
  }
}

void circular_correlate(std::span<const double> kernel, std::span<const double> x,
                        std::span<double> out) {
  const std::size_t n = kernel.size();
  assert(x.size() == n && out.size() == n);
  const auto nn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t jj = 0; jj < nn; ++jj) {
    const auto j = static_cast<std::size_t>(jj);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += kernel[(i + n - j) % n] * x[i];
    out[j] = sum;
  }
}

}  // namespace parallel

double dot(std::span<const double> x, std::span<const double> y) {
  return x.size() < kParallelThreshold ? serial::dot(x, y) : parallel::dot(x, y);
}

void gemv(std::span<const double> a, std::size_t rows, std::size_t cols,
          std::span<const double> x, std::span<double> out) {
  if (rows * cols < kParallelThreshold)
    serial::gemv(a, rows, cols, x, out);
  else
    parallel::gemv(a, rows, cols, x, out);
}

void gemv_transposed(std::span<const double> a, std::size_t rows, std::size_t cols,
                     std::span<const double> x, std::span<double> out) {
  if (rows * cols < kParallelThreshold)
    serial::gemv_transposed(a, rows, cols, x, out);
  else
    parallel::gemv_transposed(a, rows, cols, x, out);
}

void circular_convolve(std::span<const double> kernel, std::span<const double> x,
                       std::span<double> out) {
  if (kernel.size() * kernel.size() < kParallelThreshold)
    serial::circular_convolve(kernel, x, out);
  else
    parallel::circular_convolve(kernel, x, out);
}

void circular_correlate(std::span<const double> kernel, std::span<const double> x,
                        std::span<double> out) {
  if (kernel.size() * kernel.size() < kParallelThreshold)
    serial::circular_correlate(kernel, x, out);
  else
    parallel::circular_correlate(kernel, x, out);
}

}  // namespace tikreg::kernels
