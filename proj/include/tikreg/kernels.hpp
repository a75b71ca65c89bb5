#pragma once

// Dense vector/matrix kernels used by the operator layer.
//
// Two implementations with identical signatures: `serial` is the reference
// kept for testing and benchmarking, `parallel` uses OpenMP. The parallel
// kernels never split a single output's summation across threads, and the
// dot product reduces over fixed-size blocks, so results do not depend on
// the thread count.

#include <cstddef>
#include <span>

namespace tikreg::kernels {

/// Block length of the deterministic blocked reduction in parallel::dot.
inline constexpr std::size_t kDotBlock = 4096;

/// Work (multiply-adds) below which the dispatching wrappers stay serial.
inline constexpr std::size_t kParallelThreshold = 1u << 15;

namespace serial {

double dot(std::span<const double> x, std::span<const double> y);
void axpy(double alpha, std::span<const double> x, std::span<double> y);

// Row-major `rows x cols` matrix times vector.
void gemv(std::span<const double> a, std::size_t rows, std::size_t cols,
          std::span<const double> x, std::span<double> out);
void gemv_transposed(std::span<const double> a, std::size_t rows, std::size_t cols,
                     std::span<const double> x, std::span<double> out);

// out_i = sum_j kernel[(i - j) mod n] x_j
void circular_convolve(std::span<const double> kernel, std::span<const double> x,
                       std::span<double> out);
// out_j = sum_i kernel[(i - j) mod n] x_i  (adjoint of circular_convolve)
void circular_correlate(std::span<const double> kernel, std::span<const double> x,
                        std::span<double> out);

}  // namespace serial

namespace parallel {

double dot(std::span<const double> x, std::span<const double> y);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
void gemv(std::span<const double> a, std::size_t rows, std::size_t cols,
          std::span<const double> x, std::span<double> out);
void gemv_transposed(std::span<const double> a, std::size_t rows, std::size_t cols,
                     std::span<const double> x, std::span<double> out);
void circular_convolve(std::span<const double> kernel, std::span<const double> x,
                       std::span<double> out);
void circular_correlate(std::span<const double> kernel, std::span<const double> x,
                        std::span<double> out);

}  // namespace parallel

// Size-dispatching entry points used by the library.
double dot(std::span<const double> x, std::span<const double> y);
void gemv(std::span<const double> a, std::size_t rows, std::size_t cols,
          std::span<const double> x, std::span<double> out);
void gemv_transposed(std::span<const double> a, std::size_t rows, std::size_t cols,
                     std::span<const double> x, std::span<double> out);
void circular_convolve(std::span<const double> kernel, std::span<const double> x,
                       std::span<double> out);
void circular_correlate(std::span<const double> kernel, std::span<const double> x,
                        std::span<double> out);

}  // namespace tikreg::kernels
