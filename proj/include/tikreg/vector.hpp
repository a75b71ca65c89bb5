#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace tikreg {

/// Finite, non-empty real vector in Euclidean space.
///
/// The entries are validated on construction; every instance that exists
/// has dim() >= 1 and only finite entries.
class Vector {
 public:
  explicit Vector(std::vector<double> entries);
  Vector(std::initializer_list<double> entries);

  static Vector zeros(std::size_t dim);
  static Vector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const noexcept { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }
  std::span<const double> entries() const noexcept { return entries_; }

  double norm() const;
  double squared_norm() const;

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<double> entries_;
};

double dot(const Vector& a, const Vector& b);

/// Returns alpha*x + beta*y.
Vector linear_combination(double alpha, const Vector& x, double beta, const Vector& y);

Vector operator-(const Vector& a, const Vector& b);
Vector operator+(const Vector& a, const Vector& b);
Vector operator*(double alpha, const Vector& x);

double distance(const Vector& a, const Vector& b);

}  // namespace tikreg
