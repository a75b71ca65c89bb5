#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tikreg/discrepancy.hpp"
#include "tikreg/gallery.hpp"

namespace tikreg {

/// Schema version 1. Column order is fixed within a version.
inline constexpr std::string_view kCsvHeader =
    "delta,trial,epsilon,h,err,u_norm,y_norm,gap_budget,iters,mode,status,wall_ms";

class OutputUnwritable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepSpec {
  ProblemSpec problem;
  std::vector<double> delta_list;
  std::size_t trials = 1;
  DiscrepancyConfig cfg;
  std::uint64_t seed_base = 0;
  DirectionPolicy policy = DirectionPolicy::random_unit;
  /// When false, wall_ms is written as 0 so output is byte-reproducible.
  bool record_timing = false;
  std::string output_path;

  /// delta_list nonempty, positive, strictly decreasing; trials >= 1; cfg valid.
  void validate() const;
};

struct SweepRow {
  double delta;
  std::size_t trial;
  double epsilon;
  double h;
  double err;
  double u_norm;
  double y_norm;
  double gap_budget;
  std::size_t iters;
  SolverMode mode;
  /// "ok", or the ErrorKind name of the classified failure.
  std::string status;
  double wall_ms;
};

/// Noise seed of one (delta index, trial) cell.
std::uint64_t trial_seed(std::uint64_t seed_base, std::size_t delta_index, std::size_t trial);

/// Runs every (delta, trial) cell, concurrently, and returns rows ordered by
/// (delta index, trial). Failures become rows with a non-"ok" status.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

std::string format_double(double v);
void write_csv(std::ostream& os, const std::vector<SweepRow>& rows);
/// Throws OutputUnwritable if `path` cannot be opened.
void write_csv_file(const std::string& path, const std::vector<SweepRow>& rows);
/// Reads rows produced by write_csv. Throws InvalidInput on a schema mismatch.
std::vector<SweepRow> parse_csv(std::istream& is);

struct SummaryRow {
  double delta;
  std::size_t successes;
  std::size_t trials;
  /// NaN when no trial at this delta succeeded.
  double median_err;
  double median_epsilon;
};

double median(std::vector<double> values);

/// Per-delta medians over "ok" rows, in order of first appearance.
std::vector<SummaryRow> summarize(const std::vector<SweepRow>& rows);
void print_summary(std::ostream& os, const std::vector<SummaryRow>& summary);

struct SolveReport {
  std::string problem;
  std::size_t n;
  double delta;
  double data_norm;
  double target;
  ConditionInfo condition;
  PrincipleSolution solution;
  double err;
  double y_norm;
  double certified_gap_bound;
  SolverMode mode;
};

/// Builds the problem and noise, then solves for epsilon. Errors propagate.
SolveReport run_solve(const ProblemSpec& problem, double delta, std::uint64_t seed,
                      DirectionPolicy policy, const DiscrepancyConfig& cfg);
void print_solve_report(std::ostream& os, const SolveReport& report);

void print_gallery(std::ostream& os, const std::vector<ProblemSpec>& specs);

}  // namespace tikreg
