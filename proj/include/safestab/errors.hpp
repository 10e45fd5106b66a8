#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace safestab {

/// Precondition violation on controller/oracle inputs (e.g. an incompatible
/// mixed-sign state handed to k_l, or an empty feasible set).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A user-supplied field handle produced NaN/Inf or a wrong-sized vector.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(std::string field, std::ptrdiff_t coordinate, const std::string& what)
      : std::runtime_error(what), field_(std::move(field)), coordinate_(coordinate) {}

  /// Name of the offending field handle ("f", "grad_V", ...).
  const std::string& field() const noexcept { return field_; }
  /// Offending vector coordinate, or -1 for scalar fields.
  std::ptrdiff_t coordinate() const noexcept { return coordinate_; }

 private:
  std::string field_;
  std::ptrdiff_t coordinate_;
};

/// Raised when the safety-prioritizing laws see incompatible data with
/// b1 ~ 0. Valid CLF/CBF pairs cannot produce this state, so it is a loud
/// failure rather than a fallback.
class InternalInconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Non-finite state or controller failure during closed-loop integration.
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(std::size_t step, double time, const std::string& what)
      : std::runtime_error(what), step_(step), time_(time) {}

  std::size_t step() const noexcept { return step_; }
  double time() const noexcept { return time_; }

 private:
  std::size_t step_;
  double time_;
};

/// Unreadable or malformed configuration file.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace safestab
