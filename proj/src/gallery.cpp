#include "tikreg/gallery.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "tikreg/errors.hpp"

namespace tikreg {

namespace {

ConditionInfo condition_of(const LinearOperator& op) {
  const auto& s = op.spectral_factors().singular_values;
  return ConditionInfo{s(0), s(s.size() - 1)};
}

ProblemInstance assemble(LinearOperator op, Vector y, std::string name) {
  Vector f = apply(op, y);
  ConditionInfo info = condition_of(op);
  return ProblemInstance{std::move(op), std::move(y), std::move(f), std::move(name), info};
}

std::string join_names() {
  std::string out;
  for (const auto& n : problem_names()) out += (out.empty() ? "" : ", ") + n;
  return out;
}

}  // namespace

std::string_view to_string(DirectionPolicy policy) {
  switch (policy) {
    case DirectionPolicy::random_unit: return "random";
    case DirectionPolicy::worst_case_smallest_singular: return "worst";
    case DirectionPolicy::axis: return "axis";
  }
  return "unknown";
}

std::optional<DirectionPolicy> parse_direction_policy(std::string_view text) {
  if (text == "random") return DirectionPolicy::random_unit;
  if (text == "worst") return DirectionPolicy::worst_case_smallest_singular;
  if (text == "axis") return DirectionPolicy::axis;
  return std::nullopt;
}

ProblemInstance make_diagonal_problem(std::size_t n, double p) {
  if (n < 1) throw InvalidInput("diagonal problem: n must be at least 1");
  if (!(p > 0.0) || !std::isfinite(p)) throw InvalidInput("diagonal problem: p must be positive");
  std::vector<double> sigma(n), y(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double i = static_cast<double>(k + 1);
    sigma[k] = std::pow(i, -p);
    y[k] = 1.0 / i;
  }
  return assemble(LinearOperator::diagonal(std::move(sigma)), Vector(std::move(y)), "diagonal");
}

ProblemInstance make_hilbert_problem(std::size_t n) {
  if (n < 1 || n > 500) throw InvalidInput("hilbert problem: n must be in [1, 500]");
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = 1.0 / static_cast<double>(i + j + 1);
  return assemble(LinearOperator::dense(n, n, std::move(a)), Vector(std::vector<double>(n, 1.0)),
                  "hilbert");
}

ProblemInstance make_blur_problem(std::size_t n, double s) {
  if (n < 8) throw InvalidInput("blur problem: n must be at least 8");
  if (!(s > 0.0) || !std::isfinite(s)) throw InvalidInput("blur problem: s must be positive");
  const double dn = static_cast<double>(n);
  std::vector<double> kernel(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double d = static_cast<double>(std::min(j, n - j)) / dn;
    kernel[j] = std::exp(-(d * d) / (2.0 * s * s));
  }
  double mass = 0.0;
  for (double k : kernel) mass += k;
  for (double& k : kernel) k /= mass;

  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i)
    y[i] = std::max(0.0, 1.0 - std::abs(static_cast<double>(i) / dn - 0.5) * 4.0);
  return assemble(LinearOperator::circular_convolution(std::move(kernel)), Vector(std::move(y)),
                  "blur");
}

NoisyObservation make_noisy(const ProblemInstance& problem, double delta, std::uint64_t seed,
                            DirectionPolicy policy) {
  if (!(delta > 0.0) || !std::isfinite(delta))
    throw InvalidInput("make_noisy: delta must be positive and finite");
  const std::size_t m = problem.f.dim();
  std::vector<double> xi(m, 0.0);
  switch (policy) {
    case DirectionPolicy::random_unit: {
      std::mt19937_64 rng(seed);
      std::normal_distribution<double> normal(0.0, 1.0);
      double sq = 0.0;
      do {
        sq = 0.0;
        for (double& v : xi) {
          v = normal(rng);
          sq += v * v;
        }
      } while (!(sq > 0.0));
      break;
    }
    case DirectionPolicy::worst_case_smallest_singular: {
      const SvdFactors& f = problem.op.spectral_factors();
      const Eigen::Index last = f.singular_values.size() - 1;
      for (std::size_t i = 0; i < m; ++i) xi[i] = f.left(static_cast<Eigen::Index>(i), last);
      break;
    }
    case DirectionPolicy::axis:
      xi[0] = 1.0;
      break;
  }
  const double len = Vector(xi).norm();
  for (double& v : xi) v /= len;

  std::vector<double> fd(m);
  for (std::size_t i = 0; i < m; ++i) fd[i] = problem.f[i] + delta * xi[i];
  // One correction pass so the realized ||f_delta - f|| matches delta to rounding.
  std::vector<double> diff(m);
  for (std::size_t i = 0; i < m; ++i) diff[i] = fd[i] - problem.f[i];
  const double realized = Vector(diff).norm();
  if (realized > 0.0) {
    const double scale = delta / realized;
    for (std::size_t i = 0; i < m; ++i) fd[i] = problem.f[i] + scale * diff[i];
  }
  return NoisyObservation{Vector(std::move(fd)), delta, seed, policy};
}

const std::vector<std::string>& problem_names() {
  static const std::vector<std::string> names{"diagonal", "hilbert", "blur"};
  return names;
}

ProblemInstance build_problem(const ProblemSpec& spec) {
  if (spec.name == "diagonal") return make_diagonal_problem(spec.n, spec.p);
  if (spec.name == "hilbert") return make_hilbert_problem(spec.n);
  if (spec.name == "blur") return make_blur_problem(spec.n, spec.s);
  throw InvalidInput("unknown problem '" + spec.name + "'; valid names: " + join_names());
}

double null_space_component(const ProblemInstance& problem, double null_tol) {
  const SvdFactors& f = problem.op.spectral_factors();
  const Eigen::Map<const Eigen::VectorXd> y(problem.y.entries().data(),
                                            static_cast<Eigen::Index>(problem.y.dim()));
  double worst = 0.0;
  for (Eigen::Index i = 0; i < f.singular_values.size(); ++i) {
    if (f.singular_values(i) <= null_tol)
      worst = std::max(worst, std::abs(f.right.col(i).dot(y)));
  }
  // Columns beyond min(rows, cols) span the rest of the null space.
  if (f.right.cols() < f.right.rows()) {
    const Eigen::VectorXd projected = f.right * (f.right.transpose() * y);
    worst = std::max(worst, (y - projected).norm());
  }
  return worst;
}

}  // namespace tikreg
