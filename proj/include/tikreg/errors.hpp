#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tikreg {

/// Classification used by the CLI exit codes and the sweep status column.
enum class ErrorKind {
  invalid_input,
  unsupported,
  non_convergence,
  assumption_violation,
  no_root,
  root_tolerance,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Dimension mismatch, non-finite entries, out-of-range parameters.
class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what) : Error(ErrorKind::invalid_input, what) {}
};

class Unsupported : public Error {
 public:
  explicit Unsupported(const std::string& what) : Error(ErrorKind::unsupported, what) {}
};

/// ||f_delta|| <= C*delta: the data is noise-dominated and the principle does not apply.
class AssumptionViolation : public Error {
 public:
  explicit AssumptionViolation(const std::string& what)
      : Error(ErrorKind::assumption_violation, what) {}
};

/// The lower bracket endpoint h(eps) < C*delta could not be found.
class NoRoot : public Error {
 public:
  explicit NoRoot(const std::string& what) : Error(ErrorKind::no_root, what) {}
};

}  // namespace tikreg
