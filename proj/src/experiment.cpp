#include "tikreg/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

namespace tikreg {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// splitmix64 finalizer
std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SweepRow failed_row(double delta, std::size_t trial, double y_norm, const SweepSpec& spec,
                    ErrorKind kind) {
  return SweepRow{delta, trial, kNaN, kNaN, kNaN, kNaN, y_norm, spec.cfg.gap_budget(delta), 0,
                  spec.cfg.solver_mode, std::string(to_string(kind)), 0.0};
}

SweepRow solution_row(double delta, std::size_t trial, const ProblemInstance& problem,
                      const SweepSpec& spec, const PrincipleSolution& sol, std::string status) {
  return SweepRow{delta,
                  trial,
                  sol.epsilon,
                  sol.discrepancy,
                  distance(sol.u_delta, problem.y),
                  sol.u_delta.norm(),
                  problem.y.norm(),
                  sol.gap_budget_used,
                  sol.iterations_total,
                  spec.cfg.solver_mode,
                  std::move(status),
                  0.0};
}

SweepRow run_cell(const ProblemInstance& problem, const SweepSpec& spec, std::size_t delta_index,
                  std::size_t trial) {
  const double delta = spec.delta_list[delta_index];
  const auto start = std::chrono::steady_clock::now();
  SweepRow row = [&] {
    try {
      const NoisyObservation noisy =
          make_noisy(problem, delta, trial_seed(spec.seed_base, delta_index, trial), spec.policy);
      const PrincipleSolution sol = solve_for_epsilon(problem.op, noisy.f_delta, delta, spec.cfg);
      return solution_row(delta, trial, problem, spec, sol, "ok");
    } catch (const RootToleranceNotMet& e) {
      return solution_row(delta, trial, problem, spec, e.best(),
                          std::string(to_string(e.kind())));
    } catch (const Error& e) {
      return failed_row(delta, trial, problem.y.norm(), spec, e.kind());
    }
  }();
  if (spec.record_timing) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    row.wall_ms = std::chrono::duration<double, std::milli>(elapsed).count();
  }
  return row;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

double parse_double(const std::string& s) {
  if (s == "nan") return kNaN;
  std::size_t pos = 0;
  const double v = std::stod(s, &pos);
  if (pos != s.size()) throw InvalidInput("csv: bad number '" + s + "'");
  return v;
}

}  // namespace

void SweepSpec::validate() const {
  cfg.validate();
  if (delta_list.empty()) throw InvalidInput("sweep: delta list is empty");
  for (std::size_t i = 0; i < delta_list.size(); ++i) {
    if (!(delta_list[i] > 0.0) || !std::isfinite(delta_list[i]))
      throw InvalidInput("sweep: every delta must be positive");
    if (i > 0 && !(delta_list[i] < delta_list[i - 1]))
      throw InvalidInput("sweep: delta list must be strictly decreasing");
  }
  if (trials < 1) throw InvalidInput("sweep: trials must be at least 1");
}

std::uint64_t trial_seed(std::uint64_t seed_base, std::size_t delta_index, std::size_t trial) {
  const std::uint64_t cell =
      (static_cast<std::uint64_t>(delta_index) << 32) ^ static_cast<std::uint64_t>(trial);
  return seed_base + mix(cell);
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  const ProblemInstance problem = build_problem(spec.problem);
  const std::size_t cells = spec.delta_list.size() * spec.trials;
  std::vector<std::optional<SweepRow>> rows(cells);

  const auto count = static_cast<std::int64_t>(cells);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < count; ++c) {
    const auto cell = static_cast<std::size_t>(c);
    rows[cell] = run_cell(problem, spec, cell / spec.trials, cell % spec.trials);
  }

  std::vector<SweepRow> out;
  out.reserve(cells);
  for (auto& r : rows) out.push_back(std::move(*r));
  return out;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << kCsvHeader << '\n';
  for (const auto& r : rows) {
    os << format_double(r.delta) << ',' << r.trial << ',' << format_double(r.epsilon) << ','
       << format_double(r.h) << ',' << format_double(r.err) << ',' << format_double(r.u_norm)
       << ',' << format_double(r.y_norm) << ',' << format_double(r.gap_budget) << ',' << r.iters
       << ',' << to_string(r.mode) << ',' << r.status << ',' << format_double(r.wall_ms) << '\n';
  }
}

void write_csv_file(const std::string& path, const std::vector<SweepRow>& rows) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw OutputUnwritable("cannot open '" + path + "' for writing");
  write_csv(file, rows);
  file.flush();
  if (!file) throw OutputUnwritable("write to '" + path + "' failed");
}

std::vector<SweepRow> parse_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader)
    throw InvalidInput("csv: header does not match schema");
  std::vector<SweepRow> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 12) throw InvalidInput("csv: expected 12 fields, got " + std::to_string(f.size()));
    SolverMode mode;
    if (f[9] == "exact")
      mode = SolverMode::exact;
    else if (f[9] == "certified-approximate")
      mode = SolverMode::certified_approximate;
    else
      throw InvalidInput("csv: unknown mode '" + f[9] + "'");
    rows.push_back(SweepRow{parse_double(f[0]), std::stoul(f[1]), parse_double(f[2]),
                            parse_double(f[3]), parse_double(f[4]), parse_double(f[5]),
                            parse_double(f[6]), parse_double(f[7]), std::stoul(f[8]), mode, f[10],
                            parse_double(f[11])});
  }
  return rows;
}

double median(std::vector<double> values) {
  if (values.empty()) return kNaN;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

std::vector<SummaryRow> summarize(const std::vector<SweepRow>& rows) {
  std::vector<double> order;
  for (const auto& r : rows)
    if (std::find(order.begin(), order.end(), r.delta) == order.end()) order.push_back(r.delta);

  std::vector<SummaryRow> out;
  for (double delta : order) {
    std::vector<double> errs, eps;
    std::size_t trials = 0;
    for (const auto& r : rows) {
      if (r.delta != delta) continue;
      ++trials;
      if (r.status != "ok") continue;
      errs.push_back(r.err);
      eps.push_back(r.epsilon);
    }
    out.push_back(SummaryRow{delta, errs.size(), trials, median(errs), median(eps)});
  }
  return out;
}

void print_summary(std::ostream& os, const std::vector<SummaryRow>& summary) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-12s %8s %16s %16s\n", "delta", "ok/n", "median_err",
                "median_eps");
  os << buf;
  for (const auto& s : summary) {
    const std::string okn = std::to_string(s.successes) + "/" + std::to_string(s.trials);
    std::snprintf(buf, sizeof buf, "%-12.4g %8s %16.8g %16.8g\n", s.delta, okn.c_str(),
                  s.median_err, s.median_epsilon);
    os << buf;
  }
}

SolveReport run_solve(const ProblemSpec& problem_spec, double delta, std::uint64_t seed,
                      DirectionPolicy policy, const DiscrepancyConfig& cfg) {
  cfg.validate();
  const ProblemInstance problem = build_problem(problem_spec);
  const NoisyObservation noisy = make_noisy(problem, delta, seed, policy);
  const ValidatedData data = validate_data(noisy.f_delta, delta, cfg);
  PrincipleSolution sol = solve_for_epsilon(problem.op, noisy.f_delta, delta, cfg);
  const double err = distance(sol.u_delta, problem.y);
  const double gap = sol.certified_gap_bound;
  return SolveReport{problem.name, problem_spec.n,  delta,
                     data.data_norm(), data.target(),   problem.condition_info,
                     std::move(sol), err,             problem.y.norm(),
                     gap,          cfg.solver_mode};
}

void print_solve_report(std::ostream& os, const SolveReport& r) {
  const auto& s = r.solution;
  os << "problem          " << r.problem << " (n = " << r.n << ")\n"
     << "sigma max/min    " << format_double(r.condition.sigma_max) << " / "
     << format_double(r.condition.sigma_min) << '\n'
     << "solver           " << to_string(r.mode) << '\n'
     << "delta            " << format_double(r.delta) << '\n'
     << "||f_delta||      " << format_double(r.data_norm) << '\n'
     << "C*delta          " << format_double(r.target) << '\n'
     << "epsilon          " << format_double(s.epsilon) << '\n'
     << "h                " << format_double(s.discrepancy) << '\n'
     << "||u_delta - y||  " << format_double(r.err) << '\n'
     << "||u_delta||      " << format_double(s.u_delta.norm()) << '\n'
     << "||y||            " << format_double(r.y_norm) << '\n'
     << "gap budget       " << format_double(s.gap_budget_used) << '\n'
     << "certified gap    " << format_double(s.certified_gap_bound) << '\n'
     << "evaluations      " << s.bracket_trace.size() << '\n'
     << "cg iterations    " << s.iterations_total << '\n';
}

namespace {

std::string family_parameters(const std::string& name) {
  if (name == "diagonal") return "n >= 1, p > 0";
  if (name == "hilbert") return "1 <= n <= 500";
  return "n >= 8, s > 0";
}

}  // namespace

void print_gallery(std::ostream& os, const std::vector<ProblemSpec>& specs) {
  char buf[200];
  std::snprintf(buf, sizeof buf, "%-10s %-16s %-22s %12s %12s %12s\n", "problem", "parameters",
                "sample", "sigma_max", "sigma_min", "condition");
  os << buf;
  for (const auto& spec : specs) {
    const ProblemInstance p = build_problem(spec);
    char sample[64];
    if (spec.name == "diagonal")
      std::snprintf(sample, sizeof sample, "n=%zu p=%g", spec.n, spec.p);
    else if (spec.name == "blur")
      std::snprintf(sample, sizeof sample, "n=%zu s=%g", spec.n, spec.s);
    else
      std::snprintf(sample, sizeof sample, "n=%zu", spec.n);
    std::snprintf(buf, sizeof buf, "%-10s %-16s %-22s %12.5g %12.5g %12.5g\n", spec.name.c_str(),
                  family_parameters(spec.name).c_str(), sample,
                  p.condition_info.sigma_max, p.condition_info.sigma_min,
                  p.condition_info.condition_number());
    os << buf;
  }
}

}  // namespace tikreg
