#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "tikreg/vector.hpp"

namespace tikreg {

/// Thin singular value decomposition A = U diag(sigma) V^T.
///
/// `singular_values` is nonincreasing and nonnegative; `left` is rows x k and
/// `right` is cols x k with orthonormal columns, k = min(rows, cols).
struct SvdFactors {
  Eigen::VectorXd singular_values;
  Eigen::MatrixXd left;
  Eigen::MatrixXd right;
};

/// Immutable real linear map between finite-dimensional Euclidean spaces.
///
/// Copies share storage and the lazily computed SVD, which is computed at
/// most once per operator even under concurrent access.
class LinearOperator {
 public:
  enum class Representation { dense, diagonal, convolution };

  /// `entries` is row-major, size rows*cols.
  static LinearOperator dense(std::size_t rows, std::size_t cols, std::vector<double> entries);
  static LinearOperator diagonal(std::vector<double> spectrum);
  /// Circular convolution on n points: (Au)_i = sum_j kernel[(i - j) mod n] u_j.
  static LinearOperator circular_convolution(std::vector<double> kernel);

  std::size_t rows() const noexcept;
  std::size_t cols() const noexcept;
  Representation representation() const noexcept;

  /// Dense entries, diagonal spectrum or convolution kernel, by representation.
  std::span<const double> coefficients() const noexcept;

  Eigen::MatrixXd to_dense() const;

  /// SVD of the dense form, cached. Available for every representation;
  /// convolution operators are densified internally.
  const SvdFactors& spectral_factors() const;

 private:
  struct State;
  explicit LinearOperator(std::shared_ptr<State> state);
  std::shared_ptr<State> state_;
};

Vector apply(const LinearOperator& op, const Vector& u);
Vector apply_adjoint(const LinearOperator& op, const Vector& v);

/// Same operator as a dense matrix.
LinearOperator densify(const LinearOperator& op);

/// SVD for dense and diagonal operators. Convolution operators are rejected
/// with Unsupported; densify them first.
const SvdFactors& svd(const LinearOperator& op);

/// Largest singular value.
double operator_norm(const LinearOperator& op);

}  // namespace tikreg
