#include "tikreg/linear_operator.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>

#include "tikreg/errors.hpp"
#include "tikreg/kernels.hpp"

namespace tikreg {

struct LinearOperator::State {
  Representation representation;
  std::size_t rows;
  std::size_t cols;
  std::vector<double> coefficients;

  std::once_flag svd_once;
  std::optional<SvdFactors> svd;
};

namespace {

void require_finite(std::span<const double> values, const char* what) {
  for (double v : values)
    if (!std::isfinite(v)) throw InvalidInput(std::string(what) + ": non-finite coefficient");
}

SvdFactors diagonal_svd(std::span<const double> spectrum) {
  const auto n = static_cast<Eigen::Index>(spectrum.size());
  std::vector<Eigen::Index> order(spectrum.size());
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return std::abs(spectrum[a]) > std::abs(spectrum[b]);
  });

  SvdFactors f{Eigen::VectorXd(n), Eigen::MatrixXd::Zero(n, n), Eigen::MatrixXd::Zero(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index i = order[k];
    const double d = spectrum[i];
    f.singular_values(k) = std::abs(d);
    f.left(i, k) = d < 0.0 ? -1.0 : 1.0;
    f.right(i, k) = 1.0;
  }
  return f;
}

SvdFactors dense_svd(const Eigen::MatrixXd& a) {
  Eigen::BDCSVD<Eigen::MatrixXd> solver(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return SvdFactors{solver.singularValues(), solver.matrixU(), solver.matrixV()};
}

}  // namespace

LinearOperator::LinearOperator(std::shared_ptr<State> state) : state_(std::move(state)) {}

LinearOperator LinearOperator::dense(std::size_t rows, std::size_t cols,
                                     std::vector<double> entries) {
  if (rows == 0 || cols == 0) throw InvalidInput("dense operator: dimensions must be positive");
  if (entries.size() != rows * cols)
    throw InvalidInput("dense operator: expected " + std::to_string(rows * cols) +
                       " entries, got " + std::to_string(entries.size()));
  require_finite(entries, "dense operator");
  auto s = std::make_shared<State>();
  s->representation = Representation::dense;
  s->rows = rows;
  s->cols = cols;
  s->coefficients = std::move(entries);
  return LinearOperator(std::move(s));
}

LinearOperator LinearOperator::diagonal(std::vector<double> spectrum) {
  if (spectrum.empty()) throw InvalidInput("diagonal operator: empty spectrum");
  require_finite(spectrum, "diagonal operator");
  auto s = std::make_shared<State>();
  s->representation = Representation::diagonal;
  s->rows = s->cols = spectrum.size();
  s->coefficients = std::move(spectrum);
  return LinearOperator(std::move(s));
}

LinearOperator LinearOperator::circular_convolution(std::vector<double> kernel) {
  if (kernel.empty()) throw InvalidInput("convolution operator: empty kernel");
  require_finite(kernel, "convolution operator");
  auto s = std::make_shared<State>();
  s->representation = Representation::convolution;
  s->rows = s->cols = kernel.size();
  s->coefficients = std::move(kernel);
  return LinearOperator(std::move(s));
}

std::size_t LinearOperator::rows() const noexcept { return state_->rows; }
std::size_t LinearOperator::cols() const noexcept { return state_->cols; }

LinearOperator::Representation LinearOperator::representation() const noexcept {
  return state_->representation;
}

std::span<const double> LinearOperator::coefficients() const noexcept {
  return state_->coefficients;
}

Eigen::MatrixXd LinearOperator::to_dense() const {
  const auto m = static_cast<Eigen::Index>(rows());
  const auto n = static_cast<Eigen::Index>(cols());
  const auto& c = state_->coefficients;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, n);
  switch (representation()) {
    case Representation::dense:
      for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < n; ++j) a(i, j) = c[static_cast<std::size_t>(i * n + j)];
      break;
    case Representation::diagonal:
      for (Eigen::Index i = 0; i < m; ++i) a(i, i) = c[static_cast<std::size_t>(i)];
      break;
    case Representation::convolution:
      for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
          a(i, j) = c[static_cast<std::size_t>((i - j + n) % n)];
      break;
  }
  return a;
}

const SvdFactors& LinearOperator::spectral_factors() const {
  std::call_once(state_->svd_once, [this] {
    if (representation() == Representation::diagonal)
      state_->svd = diagonal_svd(state_->coefficients);
    else
      state_->svd = dense_svd(to_dense());
  });
  return *state_->svd;
}

Vector apply(const LinearOperator& op, const Vector& u) {
  if (u.dim() != op.cols())
    throw InvalidInput("apply: operator has " + std::to_string(op.cols()) +
                       " columns, vector has dimension " + std::to_string(u.dim()));
  std::vector<double> out(op.rows());
  const auto c = op.coefficients();
  switch (op.representation()) {
    case LinearOperator::Representation::dense:
      kernels::gemv(c, op.rows(), op.cols(), u.entries(), out);
      break;
    case LinearOperator::Representation::diagonal:
      for (std::size_t i = 0; i < out.size(); ++i) out[i] = c[i] * u[i];
      break;
    case LinearOperator::Representation::convolution:
      kernels::circular_convolve(c, u.entries(), out);
      break;
  }
  return Vector(std::move(out));
}

Vector apply_adjoint(const LinearOperator& op, const Vector& v) {
  if (v.dim() != op.rows())
    throw InvalidInput("apply_adjoint: operator has " + std::to_string(op.rows()) +
                       " rows, vector has dimension " + std::to_string(v.dim()));
  std::vector<double> out(op.cols());
  const auto c = op.coefficients();
  switch (op.representation()) {
    case LinearOperator::Representation::dense:
      kernels::gemv_transposed(c, op.rows(), op.cols(), v.entries(), out);
      break;
    case LinearOperator::Representation::diagonal:
      for (std::size_t i = 0; i < out.size(); ++i) out[i] = c[i] * v[i];
      break;
    case LinearOperator::Representation::convolution:
      kernels::circular_correlate(c, v.entries(), out);
      break;
  }
  return Vector(std::move(out));
}

LinearOperator densify(const LinearOperator& op) {
  if (op.representation() == LinearOperator::Representation::dense) return op;
  const Eigen::MatrixXd a = op.to_dense();
  std::vector<double> entries(static_cast<std::size_t>(a.size()));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      entries[static_cast<std::size_t>(i * a.cols() + j)] = a(i, j);
  return LinearOperator::dense(op.rows(), op.cols(), std::move(entries));
}

const SvdFactors& svd(const LinearOperator& op) {
  if (op.representation() == LinearOperator::Representation::convolution)
    throw Unsupported("svd: convolution operators must be densified first");
  return op.spectral_factors();
}

double operator_norm(const LinearOperator& op) {
  const auto& s = op.spectral_factors().singular_values;
  return s.size() > 0 ? s(0) : 0.0;
}

}  // namespace tikreg
