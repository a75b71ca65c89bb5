#pragma once

#include <cstddef>
#include <functional>
#include <string_view>

#include "tikreg/errors.hpp"
#include "tikreg/linear_operator.hpp"
#include "tikreg/vector.hpp"

namespace tikreg {

/// Tikhonov regularization parameter, strictly positive.
class RegParam {
 public:
  explicit RegParam(double epsilon);
  double value() const noexcept { return epsilon_; }

 private:
  double epsilon_;
};

/// Allowed excess of F(u) over inf F, nonnegative.
class GapBudget {
 public:
  explicit GapBudget(double budget);
  double value() const noexcept { return budget_; }

 private:
  double budget_;
};

enum class SolverMode { exact, certified_approximate };

std::string_view to_string(SolverMode mode);

struct MinimizerReport {
  Vector u;
  double objective_value;
  /// Upper bound on F(u) - inf F. Zero by convention in exact mode.
  double certified_gap_bound;
  std::size_t iterations;
  SolverMode mode;
};

/// Thrown when CG hits its iteration cap before the gap certificate holds.
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, MinimizerReport best)
      : Error(ErrorKind::non_convergence, what), best_(std::move(best)) {}
  const MinimizerReport& best() const noexcept { return best_; }

 private:
  MinimizerReport best_;
};

/// State handed to a CG observer after each iteration.
struct CgIterate {
  std::size_t iteration;
  const Vector& u;
  /// ||(A*A + eps I)u - A*f||^2 / eps, from the recomputed (not recursed) residual.
  double certificate;
};

struct CgOptions {
  /// 0 selects the default cap of 50 * cols.
  std::size_t max_iterations = 0;
  /// Keep iterating past the first certified iterate until this many steps are done.
  std::size_t min_iterations = 0;
  std::function<void(const CgIterate&)> observer;
};

/// ||(A*A + eps I)u - A*f||^2 / eps, an upper bound on F(u) - inf F.
double gap_certificate(const LinearOperator& op, const Vector& f_delta, RegParam eps,
                       const Vector& u);

/// F(u) = ||Au - f||^2 + eps ||u||^2
double evaluate_objective(const LinearOperator& op, const Vector& f_delta, RegParam eps,
                          const Vector& u);

/// Unique minimizer of F through SVD filter factors sigma_i / (sigma_i^2 + eps).
MinimizerReport exact_minimize(const LinearOperator& op, const Vector& f_delta, RegParam eps);

/// Conjugate gradients on (A*A + eps I)u = A*f from u = 0.
///
/// F is quadratic with Hessian 2(A*A + eps I) >= 2 eps I, so
///   F(u) - inf F <= ||grad F(u)||^2 / (4 eps) = ||(A*A + eps I)u - A*f||^2 / eps.
/// Iteration stops as soon as that bound, evaluated on the recomputed residual,
/// is at most `gap`. The returned certified_gap_bound is the bound itself.
MinimizerReport certified_approx_minimize(const LinearOperator& op, const Vector& f_delta,
                                          RegParam eps, GapBudget gap,
                                          const CgOptions& options = {});

}  // namespace tikreg
