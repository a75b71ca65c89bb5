#include "tikreg/tikhonov.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "tikreg/kernels.hpp"

namespace tikreg {

namespace {

void require_compatible(const LinearOperator& op, const Vector& f_delta, const char* what) {
  if (f_delta.dim() != op.rows())
    throw InvalidInput(std::string(what) + ": data has dimension " + std::to_string(f_delta.dim()) +
                       ", operator has " + std::to_string(op.rows()) + " rows");
}

// (A*A + eps I)u - A*f
std::vector<double> normal_residual(const LinearOperator& op, const Vector& atf, double eps,
                                    const Vector& u) {
  const Vector ata_u = apply_adjoint(op, apply(op, u));
  std::vector<double> r(u.dim());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = ata_u[i] + eps * u[i] - atf[i];
  return r;
}

}  // namespace

double gap_certificate(const LinearOperator& op, const Vector& f_delta, RegParam eps,
                       const Vector& u) {
  require_compatible(op, f_delta, "gap_certificate");
  if (u.dim() != op.cols()) throw InvalidInput("gap_certificate: u has wrong dimension");
  const auto res = normal_residual(op, apply_adjoint(op, f_delta), eps.value(), u);
  return kernels::dot(res, res) / eps.value();
}

RegParam::RegParam(double epsilon) : epsilon_(epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon))
    throw InvalidInput("regularization parameter must be positive and finite, got " +
                       std::to_string(epsilon));
}

GapBudget::GapBudget(double budget) : budget_(budget) {
  if (!(budget >= 0.0) || !std::isfinite(budget))
    throw InvalidInput("gap budget must be nonnegative and finite, got " + std::to_string(budget));
}

std::string_view to_string(SolverMode mode) {
  return mode == SolverMode::exact ? "exact" : "certified-approximate";
}

double evaluate_objective(const LinearOperator& op, const Vector& f_delta, RegParam eps,
                          const Vector& u) {
  require_compatible(op, f_delta, "evaluate_objective");
  const Vector residual = apply(op, u) - f_delta;
  return residual.squared_norm() + eps.value() * u.squared_norm();
}

MinimizerReport exact_minimize(const LinearOperator& op, const Vector& f_delta, RegParam eps) {
  require_compatible(op, f_delta, "exact_minimize");
  const SvdFactors& f = op.spectral_factors();
  const Eigen::Map<const Eigen::VectorXd> data(f_delta.entries().data(),
                                               static_cast<Eigen::Index>(f_delta.dim()));
  Eigen::VectorXd coeff = f.left.transpose() * data;
  for (Eigen::Index i = 0; i < coeff.size(); ++i) {
    const double s = f.singular_values(i);
    coeff(i) *= s / (s * s + eps.value());
  }
  const Eigen::VectorXd u = f.right * coeff;
  Vector solution(std::vector<double>(u.data(), u.data() + u.size()));
  const double value = evaluate_objective(op, f_delta, eps, solution);
  return MinimizerReport{std::move(solution), value, 0.0, 0, SolverMode::exact};
}

MinimizerReport certified_approx_minimize(const LinearOperator& op, const Vector& f_delta,
                                          RegParam eps, GapBudget gap,
                                          const CgOptions& options) {
  require_compatible(op, f_delta, "certified_approx_minimize");
  if (!(gap.value() > 0.0)) throw InvalidInput("certified_approx_minimize: gap budget must be positive");

  const double e = eps.value();
  const double budget = gap.value();
  const std::size_t n = op.cols();
  const std::size_t cap = options.max_iterations ? options.max_iterations : 50 * n;

  const Vector atf = apply_adjoint(op, f_delta);
  std::vector<double> u(n, 0.0);
  std::vector<double> r(atf.entries().begin(), atf.entries().end());  // -(residual) at u = 0
  std::vector<double> p = r;
  double rr = kernels::dot(r, r);

  auto report = [&](std::vector<double> x, double certificate, std::size_t iterations) {
    Vector v(std::move(x));
    const double value = evaluate_objective(op, f_delta, eps, v);
    return MinimizerReport{std::move(v), value, certificate, iterations,
                           SolverMode::certified_approximate};
  };

  if (rr / e <= budget && options.min_iterations == 0) return report(u, rr / e, 0);

  std::vector<double> best_u = u;
  double best_rr = rr;

  for (std::size_t k = 1; k <= cap; ++k) {
    const Vector pv(p);
    const Vector ap = apply_adjoint(op, apply(op, pv));
    std::vector<double> q(n);
    for (std::size_t i = 0; i < n; ++i) q[i] = ap[i] + e * p[i];

    const double pq = kernels::dot(p, q);
    if (!(pq > 0.0)) break;
    const double alpha = rr / pq;
    kernels::serial::axpy(alpha, p, u);
    kernels::serial::axpy(-alpha, q, r);
    double rr_next = kernels::dot(r, r);

    std::optional<double> true_certificate;
    auto certify = [&]() {
      if (!true_certificate) {
        const auto res = normal_residual(op, atf, e, Vector(u));
        true_certificate = kernels::dot(res, res) / e;
      }
      return *true_certificate;
    };

    if (options.observer) options.observer(CgIterate{k, Vector(u), certify()});

    if (rr_next < best_rr) {
      best_rr = rr_next;
      best_u = u;
    }

    if (rr_next / e <= budget && (k >= options.min_iterations || rr_next == 0.0)) {
      const double c = certify();
      if (c <= budget) return report(u, c, k);
      // Recursed residual drifted from the true one: replace it and restart.
      const auto res = normal_residual(op, atf, e, Vector(u));
      for (std::size_t i = 0; i < n; ++i) r[i] = -res[i];
      rr = kernels::dot(r, r);
      p = r;
      continue;
    }

    const double beta = rr_next / rr;
    for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
    rr = rr_next;
  }

  const auto res = normal_residual(op, atf, e, Vector(best_u));
  const double c = kernels::dot(res, res) / e;
  throw NonConvergence("certified_approx_minimize: gap certificate " + std::to_string(c) +
                           " did not reach budget " + std::to_string(budget) + " within " +
                           std::to_string(cap) + " iterations",
                       report(best_u, c, cap));
}

}  // namespace tikreg
