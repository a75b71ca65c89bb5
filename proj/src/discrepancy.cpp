#include "tikreg/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>
#include <sstream>
#include <string>

namespace tikreg {

namespace {

std::string describe(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

PrincipleSolution make_solution(double eps, DiscrepancyValue value, double delta,
                                const DiscrepancyConfig& cfg, std::vector<TracePoint> trace,
                                std::size_t iterations) {
  return PrincipleSolution{eps,
                           std::move(value.report.u),
                           value.h,
                           cfg.gap_budget(delta),
                           value.report.certified_gap_bound,
                           std::move(trace),
                           iterations};
}

// CG stops at the first certified iterate, so in approximate mode h jumps where the
// iteration count changes and bisection can pinch onto a jump. Every later CG iterate at
// the same eps is also within budget (the F-gap decreases along CG), and so is any convex
// combination of two of them (F is convex). Walk a few iterates past the endpoint until h
// crosses C delta, then pick the point on the segment where h = C delta exactly.
std::optional<DiscrepancyValue> refine_across_jump(const LinearOperator& op, const Vector& f_delta,
                                                   double eps, const DiscrepancyValue& start,
                                                   double delta, const DiscrepancyConfig& cfg,
                                                   std::size_t& iterations) {
  constexpr std::size_t kExtraIterates = 8;
  const double target = cfg.target(delta);
  const double budget = cfg.gap_budget(delta);
  const bool above = start.h > target;

  const DiscrepancyValue* a = &start;
  std::optional<DiscrepancyValue> crossed;
  for (std::size_t extra = 1; extra <= kExtraIterates; ++extra) {
    CgOptions options;
    options.min_iterations = start.report.iterations + extra;
    try {
      MinimizerReport r =
          certified_approx_minimize(op, f_delta, RegParam(eps), GapBudget(budget), options);
      iterations += r.iterations;
      const double h = (apply(op, r.u) - f_delta).norm();
      if ((h > target) != above) {
        crossed = DiscrepancyValue{h, std::move(r)};
        break;
      }
    } catch (const NonConvergence&) {
      return std::nullopt;
    }
  }
  if (!crossed) return std::nullopt;
  const DiscrepancyValue& b = *crossed;

  // |r_a + theta d|^2 = target^2 with r_a = A u_a - f, d = A (u_b - u_a)
  const Vector r_a = apply(op, a->report.u) - f_delta;
  const Vector du = b.report.u - a->report.u;
  const Vector d = apply(op, du);
  const double qa = d.squared_norm();
  const double qb = 2.0 * dot(r_a, d);
  const double qc = r_a.squared_norm() - target * target;
  if (!(qa > 0.0)) return std::nullopt;
  const double disc = std::max(qb * qb - 4.0 * qa * qc, 0.0);
  const double sq = std::sqrt(disc);
  double theta = -1.0;
  for (double root : {(-qb - sq) / (2.0 * qa), (-qb + sq) / (2.0 * qa)})
    if (root >= 0.0 && root <= 1.0) {
      theta = root;
      break;
    }
  if (theta < 0.0) return std::nullopt;

  Vector u = linear_combination(1.0, a->report.u, theta, du);
  const double h = (apply(op, u) - f_delta).norm();
  const double certificate = gap_certificate(op, f_delta, RegParam(eps), u);
  if (!cfg.within_band(h, delta) || !(certificate <= budget)) return std::nullopt;
  const double value = evaluate_objective(op, f_delta, RegParam(eps), u);
  return DiscrepancyValue{h, MinimizerReport{std::move(u), value, certificate, b.report.iterations,
                                             SolverMode::certified_approximate}};
}

}  // namespace

void DiscrepancyConfig::validate() const {
  if (!(C > 1.0)) throw InvalidInput("DiscrepancyConfig: C must exceed 1, got " + describe(C));
  if (!(b > 0.0)) throw InvalidInput("DiscrepancyConfig: b must be positive, got " + describe(b));
  if (!(C * C > 1.0 + b))
    throw InvalidInput("DiscrepancyConfig: C^2 > 1 + b is violated (C^2 = " + describe(C * C) +
                       ", 1 + b = " + describe(1.0 + b) + ")");
  if (!(root_rel_tol > 0.0)) throw InvalidInput("DiscrepancyConfig: root_rel_tol must be positive");
  if (!(eps_init > 0.0) || !std::isfinite(eps_init))
    throw InvalidInput("DiscrepancyConfig: eps_init must be positive and finite");
  if (!(bracket_factor > 1.0) || !std::isfinite(bracket_factor))
    throw InvalidInput("DiscrepancyConfig: bracket_factor must exceed 1");
  if (max_bracket_steps == 0) throw InvalidInput("DiscrepancyConfig: max_bracket_steps must be positive");
  if (max_bisection_steps == 0)
    throw InvalidInput("DiscrepancyConfig: max_bisection_steps must be positive");
}

bool DiscrepancyConfig::within_band(double h, double delta) const noexcept {
  const double t = target(delta);
  return std::abs(h - t) <= root_rel_tol * t;
}

DiscrepancyValue discrepancy_norm(const LinearOperator& op, const Vector& f_delta, RegParam eps,
                                  const DiscrepancyConfig& cfg, double delta) {
  cfg.validate();
  if (!(delta > 0.0) || !std::isfinite(delta))
    throw InvalidInput("discrepancy_norm: delta must be positive, got " + describe(delta));
  MinimizerReport report = cfg.solver_mode == SolverMode::exact
                               ? exact_minimize(op, f_delta, eps)
                               : certified_approx_minimize(op, f_delta, eps,
                                                           GapBudget(cfg.gap_budget(delta)));
  const double h = (apply(op, report.u) - f_delta).norm();
  return DiscrepancyValue{h, std::move(report)};
}

ValidatedData validate_data(const Vector& f_delta, double delta, const DiscrepancyConfig& cfg) {
  cfg.validate();
  if (!(delta > 0.0) || !std::isfinite(delta))
    throw InvalidInput("validate_data: delta must be positive, got " + describe(delta));
  const double norm = f_delta.norm();
  const double target = cfg.target(delta);
  if (!(norm > target))
    throw AssumptionViolation("||f_delta|| > C*delta is violated: ||f_delta|| = " + describe(norm) +
                              ", C*delta = " + describe(target) +
                              " (data is noise-dominated; the principle does not apply)");
  return ValidatedData(norm, target);
}

Bracket bracket_root(const LinearOperator& op, const Vector& f_delta, double delta,
                     const DiscrepancyConfig& cfg) {
  const ValidatedData data = validate_data(f_delta, delta, cfg);
  const double target = data.target();

  std::vector<TracePoint> trace;
  std::size_t iterations = 0;
  auto evaluate = [&](double eps) {
    DiscrepancyValue v = discrepancy_norm(op, f_delta, RegParam(eps), cfg, delta);
    trace.push_back({eps, v.h});
    iterations += v.report.iterations;
    return v;
  };

  double eps = cfg.eps_init;
  DiscrepancyValue first = evaluate(eps);
  if (cfg.within_band(first.h, delta)) {
    DiscrepancyValue copy = first;
    return Bracket{eps, eps, std::move(first), std::move(copy), std::move(trace), iterations};
  }

  if (first.h > target) {
    // Walk down until h < C delta.
    double hi_eps = eps;
    DiscrepancyValue hi = std::move(first);
    for (std::size_t step = 0; step < cfg.max_bracket_steps; ++step) {
      const double next = hi_eps / cfg.bracket_factor;
      if (!(next > 0.0)) break;
      DiscrepancyValue v = evaluate(next);
      if (v.h < target || cfg.within_band(v.h, delta))
        return Bracket{next, hi_eps, std::move(v), std::move(hi), std::move(trace), iterations};
      hi_eps = next;
      hi = std::move(v);
    }
    throw NoRoot("no eps with h(eps) < C*delta = " + describe(target) + " down to eps = " +
                 describe(hi_eps) + "; Au = f may be unsolvable at this discretization, or delta "
                 "underestimates the noise");
  }

  // h < C delta at eps_init: walk up. h -> ||f_delta|| > C delta as eps grows.
  double lo_eps = eps;
  DiscrepancyValue lo = std::move(first);
  for (std::size_t step = 0; step < cfg.max_bracket_steps; ++step) {
    const double next = lo_eps * cfg.bracket_factor;
    if (!std::isfinite(next)) break;
    DiscrepancyValue v = evaluate(next);
    if (v.h > target || cfg.within_band(v.h, delta))
      return Bracket{lo_eps, next, std::move(lo), std::move(v), std::move(trace), iterations};
    lo_eps = next;
    lo = std::move(v);
  }
  throw NoRoot("no eps with h(eps) > C*delta = " + describe(target) + " up to eps = " +
               describe(lo_eps));
}

PrincipleSolution solve_for_epsilon(const LinearOperator& op, const Vector& f_delta, double delta,
                                    const DiscrepancyConfig& cfg) {
  Bracket br = bracket_root(op, f_delta, delta, cfg);
  std::vector<TracePoint> trace = std::move(br.trace);
  std::size_t iterations = br.iterations;

  if (cfg.within_band(br.hi.h, delta))
    return make_solution(br.eps_hi, std::move(br.hi), delta, cfg, std::move(trace), iterations);
  if (cfg.within_band(br.lo.h, delta))
    return make_solution(br.eps_lo, std::move(br.lo), delta, cfg, std::move(trace), iterations);

  const double target = cfg.target(delta);
  double log_lo = std::log(br.eps_lo);
  double log_hi = std::log(br.eps_hi);

  DiscrepancyValue lo = std::move(br.lo);
  DiscrepancyValue hi = std::move(br.hi);

  for (std::size_t step = 0; step < cfg.max_bisection_steps; ++step) {
    const double log_mid = 0.5 * (log_lo + log_hi);
    if (!(log_mid > log_lo && log_mid < log_hi)) break;
    const double eps = std::exp(log_mid);
    DiscrepancyValue v = discrepancy_norm(op, f_delta, RegParam(eps), cfg, delta);
    trace.push_back({eps, v.h});
    iterations += v.report.iterations;

    if (cfg.within_band(v.h, delta))
      return make_solution(eps, std::move(v), delta, cfg, std::move(trace), iterations);

    if (v.h < target) {
      log_lo = log_mid;
      lo = std::move(v);
    } else {
      log_hi = log_mid;
      hi = std::move(v);
    }
  }

  const double eps_lo = std::exp(log_lo);
  const double eps_hi = std::exp(log_hi);
  if (cfg.solver_mode == SolverMode::certified_approximate) {
    for (auto [eps, end] : {std::pair{eps_hi, &hi}, std::pair{eps_lo, &lo}}) {
      if (auto v = refine_across_jump(op, f_delta, eps, *end, delta, cfg, iterations)) {
        trace.push_back({eps, v->h});
        return make_solution(eps, std::move(*v), delta, cfg, std::move(trace), iterations);
      }
    }
  }

  const bool hi_closer = std::abs(hi.h - target) <= std::abs(lo.h - target);
  const double best_eps = hi_closer ? eps_hi : eps_lo;
  DiscrepancyValue best = hi_closer ? std::move(hi) : std::move(lo);

  const double miss = std::abs(best.h - target) / target;
  PrincipleSolution sol =
      make_solution(best_eps, std::move(best), delta, cfg, std::move(trace), iterations);
  throw RootToleranceNotMet("bisection did not reach |h - C*delta| <= " +
                                describe(cfg.root_rel_tol) + " * C*delta (best relative miss " +
                                describe(miss) + ")",
                            std::move(sol));
}

bool norm_bound_check(const PrincipleSolution& sol, const Vector& y, double delta,
                      const DiscrepancyConfig& cfg, double slack) {
  if (!(delta > 0.0)) throw InvalidInput("norm_bound_check: delta must be positive");
  const double lhs = sol.u_delta.squared_norm() + cfg.b * delta * delta / sol.epsilon;
  return lhs <= y.squared_norm() * (1.0 + slack);
}

}  // namespace tikreg
