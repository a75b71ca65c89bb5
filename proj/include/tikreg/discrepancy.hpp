#pragma once

#include <cstddef>
#include <vector>

#include "tikreg/tikhonov.hpp"

namespace tikreg {

/// Constants of the discrepancy principle and root-finder controls.
///
/// Approximate minimizers are accepted when F(u) <= inf F + (C^2 - 1 - b) delta^2,
/// which requires C > 1, b > 0 and C^2 > 1 + b.
struct DiscrepancyConfig {
  double C = 1.5;
  double b = 0.5;
  double root_rel_tol = 1e-6;
  double eps_init = 1.0;
  double bracket_factor = 10.0;
  std::size_t max_bracket_steps = 200;
  std::size_t max_bisection_steps = 200;
  SolverMode solver_mode = SolverMode::exact;

  /// Throws InvalidInput naming the first violated constraint.
  void validate() const;

  double gap_factor() const noexcept { return C * C - 1.0 - b; }
  double gap_budget(double delta) const noexcept { return gap_factor() * delta * delta; }
  double target(double delta) const noexcept { return C * delta; }
  bool within_band(double h, double delta) const noexcept;
};

struct TracePoint {
  double epsilon;
  double h;
};

struct PrincipleSolution {
  double epsilon;
  Vector u_delta;
  /// h(delta, epsilon) = ||A u_delta - f_delta||
  double discrepancy;
  double gap_budget_used;
  /// Gap certificate of u_delta (0 in exact mode).
  double certified_gap_bound;
  /// Every (eps, h) evaluated, bracketing first then bisection, in evaluation order.
  std::vector<TracePoint> bracket_trace;
  std::size_t iterations_total;
};

/// Bisection cap reached without |h - C delta| <= tol * C delta.
class RootToleranceNotMet : public Error {
 public:
  RootToleranceNotMet(const std::string& what, PrincipleSolution best)
      : Error(ErrorKind::root_tolerance, what), best_(std::move(best)) {}
  const PrincipleSolution& best() const noexcept { return best_; }

 private:
  PrincipleSolution best_;
};

struct DiscrepancyValue {
  double h;
  MinimizerReport report;
};

/// h(delta, eps) with u_{delta,eps} from the configured solver; the
/// approximate solver gets the budget (C^2 - 1 - b) delta^2.
DiscrepancyValue discrepancy_norm(const LinearOperator& op, const Vector& f_delta, RegParam eps,
                                  const DiscrepancyConfig& cfg, double delta);

/// Proof that ||f_delta|| > C delta held for a given (f_delta, delta, cfg).
class ValidatedData {
 public:
  double data_norm() const noexcept { return data_norm_; }
  double target() const noexcept { return target_; }

 private:
  friend ValidatedData validate_data(const Vector&, double, const DiscrepancyConfig&);
  ValidatedData(double data_norm, double target) : data_norm_(data_norm), target_(target) {}
  double data_norm_;
  double target_;
};

/// Throws AssumptionViolation unless ||f_delta|| > C delta (strict).
ValidatedData validate_data(const Vector& f_delta, double delta, const DiscrepancyConfig& cfg);

struct Bracket {
  double eps_lo;
  double eps_hi;
  DiscrepancyValue lo;
  DiscrepancyValue hi;
  std::vector<TracePoint> trace;
  std::size_t iterations;
};

/// Geometric search from eps_init for h(eps_lo) < C delta < h(eps_hi).
/// If an evaluated point already lies in the root band it is returned as both
/// endpoints. Throws NoRoot when the lower side is not found within
/// max_bracket_steps.
Bracket bracket_root(const LinearOperator& op, const Vector& f_delta, double delta,
                     const DiscrepancyConfig& cfg);

/// Bisection on log eps inside the bracket until |h - C delta| <= tol * C delta.
PrincipleSolution solve_for_epsilon(const LinearOperator& op, const Vector& f_delta, double delta,
                                    const DiscrepancyConfig& cfg);

/// ||u_delta||^2 + b delta^2 / eps(delta) <= ||y||^2 (1 + slack)
bool norm_bound_check(const PrincipleSolution& sol, const Vector& y, double delta,
                      const DiscrepancyConfig& cfg, double slack = 1e-6);

}  // namespace tikreg
