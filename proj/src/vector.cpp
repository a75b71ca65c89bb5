#include "tikreg/vector.hpp"

#include <cmath>
#include <string>

#include "tikreg/errors.hpp"
#include "tikreg/kernels.hpp"

namespace tikreg {

namespace {

void require_same_dim(const Vector& a, const Vector& b, const char* what) {
  if (a.dim() != b.dim())
    throw InvalidInput(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) +
                       " vs " + std::to_string(b.dim()) + ")");
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input: return "invalid_input";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::non_convergence: return "non_convergence";
    case ErrorKind::assumption_violation: return "assumption_violation";
    case ErrorKind::no_root: return "no_root";
    case ErrorKind::root_tolerance: return "root_tolerance";
  }
  return "unknown";
}

Vector::Vector(std::vector<double> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidInput("Vector: dimension must be positive");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!std::isfinite(entries_[i]))
      throw InvalidInput("Vector: non-finite entry at index " + std::to_string(i));
  }
}

Vector::Vector(std::initializer_list<double> entries) : Vector(std::vector<double>(entries)) {}

Vector Vector::zeros(std::size_t dim) { return Vector(std::vector<double>(dim, 0.0)); }

Vector Vector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw InvalidInput("Vector::basis: index out of range");
  std::vector<double> e(dim, 0.0);
  e[index] = 1.0;
  return Vector(std::move(e));
}

double Vector::squared_norm() const { return kernels::dot(entries_, entries_); }

double Vector::norm() const { return std::sqrt(squared_norm()); }

double dot(const Vector& a, const Vector& b) {
  require_same_dim(a, b, "dot");
  return kernels::dot(a.entries(), b.entries());
}

Vector linear_combination(double alpha, const Vector& x, double beta, const Vector& y) {
  require_same_dim(x, y, "linear_combination");
  std::vector<double> out(x.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = alpha * x[i] + beta * y[i];
  return Vector(std::move(out));
}

Vector operator-(const Vector& a, const Vector& b) { return linear_combination(1.0, a, -1.0, b); }

Vector operator+(const Vector& a, const Vector& b) { return linear_combination(1.0, a, 1.0, b); }

Vector operator*(double alpha, const Vector& x) {
  std::vector<double> out(x.entries().begin(), x.entries().end());
  for (double& v : out) v *= alpha;
  return Vector(std::move(out));
}

double distance(const Vector& a, const Vector& b) { return (a - b).norm(); }

}  // namespace tikreg
