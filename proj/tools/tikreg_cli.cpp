// tikreg: Tikhonov regularization with a discrepancy-principle parameter
// choice that accepts certified approximate minimizers.
//
//   tikreg solve   --problem diagonal --n 1 --delta 0.05 --policy axis
//   tikreg sweep   --problem diagonal --n 50 --delta-list 1e-1,1e-2,1e-3 --trials 5 --out sweep.csv
//   tikreg gallery [--problem hilbert --n 10]
//
// Exit codes: 0 ok, 2 ||f_delta|| <= C*delta, 3 no root bracket, 4 other
// numerical failure, 64 usage error, 66 output not writable.

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tikreg/experiment.hpp"

namespace {

constexpr int kExitAssumption = 2;
constexpr int kExitNoRoot = 3;
constexpr int kExitNumerical = 4;
constexpr int kExitUsage = 64;
constexpr int kExitCantCreate = 66;

struct CommonOptions {
  std::string problem = "diagonal";
  std::size_t n = 50;
  double p = 1.0;
  double s = 0.05;
  double C = 1.5;
  double b = 0.5;
  double root_tol = 1e-6;
  std::string solver = "exact";
  std::string policy = "random";
  std::uint64_t seed = 0;
};

void add_problem_options(CLI::App& cmd, CommonOptions& o) {
  cmd.add_option("--problem", o.problem, "Problem family")
      ->check(CLI::IsMember(tikreg::problem_names()))
      ->capture_default_str();
  cmd.add_option("--n", o.n, "Problem size")->check(CLI::PositiveNumber)->capture_default_str();
  cmd.add_option("--p", o.p, "Spectral decay exponent (diagonal)")->capture_default_str();
  cmd.add_option("--s", o.s, "Kernel width (blur)")->capture_default_str();
}

void add_solver_options(CLI::App& cmd, CommonOptions& o) {
  cmd.add_option("--C", o.C, "Discrepancy constant, C > 1")->capture_default_str();
  cmd.add_option("--b", o.b, "Gap constant, b > 0 with C^2 > 1 + b")->capture_default_str();
  cmd.add_option("--root-tol", o.root_tol, "Relative root band on h = C*delta")
      ->capture_default_str();
  cmd.add_option("--solver", o.solver, "Tikhonov minimizer")
      ->check(CLI::IsMember({"exact", "cg"}))
      ->capture_default_str();
  cmd.add_option("--policy", o.policy, "Noise direction")
      ->check(CLI::IsMember({"random", "worst", "axis"}))
      ->capture_default_str();
  cmd.add_option("--seed", o.seed, "Noise seed (sweep: seed base)")->capture_default_str();
}

tikreg::ProblemSpec problem_spec(const CommonOptions& o) {
  return tikreg::ProblemSpec{o.problem, o.n, o.p, o.s};
}

tikreg::DiscrepancyConfig config(const CommonOptions& o) {
  tikreg::DiscrepancyConfig cfg;
  cfg.C = o.C;
  cfg.b = o.b;
  cfg.root_rel_tol = o.root_tol;
  cfg.solver_mode = o.solver == "cg" ? tikreg::SolverMode::certified_approximate
                                     : tikreg::SolverMode::exact;
  return cfg;
}

int exit_code_for(const tikreg::Error& e) {
  switch (e.kind()) {
    case tikreg::ErrorKind::assumption_violation: return kExitAssumption;
    case tikreg::ErrorKind::no_root: return kExitNoRoot;
    case tikreg::ErrorKind::invalid_input:
    case tikreg::ErrorKind::unsupported: return kExitUsage;
    case tikreg::ErrorKind::non_convergence:
    case tikreg::ErrorKind::root_tolerance: return kExitNumerical;
  }
  return kExitNumerical;
}

std::size_t default_gallery_size(const std::string& name) {
  static const std::map<std::string, std::size_t> sizes{
      {"diagonal", 50}, {"hilbert", 10}, {"blur", 64}};
  return sizes.at(name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tikhonov regularization with a certified discrepancy principle"};
  app.require_subcommand(1);

  CommonOptions solve_opts;
  double solve_delta = 0.0;
  auto* solve = app.add_subcommand("solve", "Choose epsilon for one noisy observation");
  add_problem_options(*solve, solve_opts);
  add_solver_options(*solve, solve_opts);
  solve->add_option("--delta", solve_delta, "Noise level")->required();

  CommonOptions sweep_opts;
  std::vector<double> delta_list;
  std::size_t trials = 1;
  std::string out_path;
  bool timing = false;
  auto* sweep = app.add_subcommand("sweep", "delta sweep convergence experiment, CSV output");
  add_problem_options(*sweep, sweep_opts);
  add_solver_options(*sweep, sweep_opts);
  sweep->add_option("--delta-list", delta_list, "Strictly decreasing noise levels")
      ->required()
      ->delimiter(',');
  sweep->add_option("--trials", trials, "Trials per delta")->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep->add_option("--out", out_path, "CSV output path (default: standard output)");
  sweep->add_flag("--timing", timing, "Record wall_ms (output is then not byte-reproducible)");

  std::optional<std::string> gallery_problem;
  std::optional<std::size_t> gallery_n;
  auto* gallery = app.add_subcommand("gallery", "List problem families with condition numbers");
  gallery->add_option("--problem", gallery_problem, "Only this family")
      ->check(CLI::IsMember(tikreg::problem_names()));
  gallery->add_option("--n", gallery_n, "Sample size")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*solve) {
      const auto report =
          tikreg::run_solve(problem_spec(solve_opts), solve_delta, solve_opts.seed,
                            *tikreg::parse_direction_policy(solve_opts.policy), config(solve_opts));
      tikreg::print_solve_report(std::cout, report);
      return 0;
    }

    if (*sweep) {
      tikreg::SweepSpec spec;
      spec.problem = problem_spec(sweep_opts);
      spec.delta_list = delta_list;
      spec.trials = trials;
      spec.cfg = config(sweep_opts);
      spec.seed_base = sweep_opts.seed;
      spec.policy = *tikreg::parse_direction_policy(sweep_opts.policy);
      spec.record_timing = timing;
      spec.output_path = out_path;

      const auto rows = tikreg::run_sweep(spec);
      if (out_path.empty()) {
        tikreg::write_csv(std::cout, rows);
        tikreg::print_summary(std::cerr, tikreg::summarize(rows));
      } else {
        tikreg::write_csv_file(out_path, rows);
        tikreg::print_summary(std::cout, tikreg::summarize(rows));
      }
      return 0;
    }

    std::vector<tikreg::ProblemSpec> specs;
    for (const auto& name : tikreg::problem_names()) {
      if (gallery_problem && *gallery_problem != name) continue;
      specs.push_back(tikreg::ProblemSpec{name, gallery_n.value_or(default_gallery_size(name))});
    }
    tikreg::print_gallery(std::cout, specs);
    return 0;
  } catch (const tikreg::OutputUnwritable& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCantCreate;
  } catch (const tikreg::Error& e) {
    std::cerr << "error (" << tikreg::to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code_for(e);
  }
}
