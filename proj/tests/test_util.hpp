#pragma once

#include <random>
#include <vector>

#include "tikreg/linear_operator.hpp"
#include "tikreg/vector.hpp"

namespace tikreg::testing {

inline Vector random_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = normal(rng);
  return Vector(std::move(v));
}

inline LinearOperator random_dense(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> a(rows * cols);
  for (auto& x : a) x = normal(rng);
  return LinearOperator::dense(rows, cols, std::move(a));
}

inline double relative_gap(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace tikreg::testing
