#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tikreg/linear_operator.hpp"
#include "tikreg/vector.hpp"

namespace tikreg {

struct ConditionInfo {
  double sigma_max;
  double sigma_min;
  double condition_number() const noexcept { return sigma_max / sigma_min; }
};

/// Synthetic problem A y = f with y the minimal-norm solution.
struct ProblemInstance {
  LinearOperator op;
  Vector y;
  Vector f;
  std::string name;
  ConditionInfo condition_info;
};

enum class DirectionPolicy { random_unit, worst_case_smallest_singular, axis };

std::string_view to_string(DirectionPolicy policy);
std::optional<DirectionPolicy> parse_direction_policy(std::string_view text);

struct NoisyObservation {
  Vector f_delta;
  double delta;
  std::uint64_t seed;
  DirectionPolicy policy;
};

/// A = diag(i^-p), y_i = 1/i, i = 1..n.
ProblemInstance make_diagonal_problem(std::size_t n, double p);

/// A_ij = 1/(i + j - 1), y = ones. 1 <= n <= 500.
ProblemInstance make_hilbert_problem(std::size_t n);

/// Circular Gaussian blur of width s on n >= 8 points over [0, 1), applied to
/// the triangular bump y_i = max(0, 1 - 4|i/n - 1/2|).
ProblemInstance make_blur_problem(std::size_t n, double s = 0.05);

/// f_delta = f + delta * xi with ||xi|| = 1 chosen by `policy`.
NoisyObservation make_noisy(const ProblemInstance& problem, double delta, std::uint64_t seed,
                            DirectionPolicy policy);

/// Problem family and parameters as addressed from the command line.
struct ProblemSpec {
  std::string name;
  std::size_t n = 50;
  double p = 1.0;
  double s = 0.05;
};

const std::vector<std::string>& problem_names();

/// Throws InvalidInput for an unknown family name or out-of-range parameters.
ProblemInstance build_problem(const ProblemSpec& spec);

/// max |<y, v_i>| over right-singular vectors with sigma_i <= null_tol.
/// Zero when y is orthogonal to the (numerical) null space.
double null_space_component(const ProblemInstance& problem, double null_tol = 0.0);

}  // namespace tikreg
