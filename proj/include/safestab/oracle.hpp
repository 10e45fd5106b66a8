#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "safestab/errors.hpp"
#include "safestab/lie_data.hpp"

namespace safestab {

/// Shape of the feasible control set {u : a0 + b0*u < 0 and a1 + b1*u < 0}.
enum class FeasibleSetKind {
  Empty,
  AllReals,
  OpenHalfLineBelow,  ///< u < upper
  OpenHalfLineAbove,  ///< u > lower
  OpenInterval,       ///< lower < u < upper
};

struct FeasibleSet {
  FeasibleSetKind kind = FeasibleSetKind::Empty;
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();

  bool nonempty() const noexcept { return kind != FeasibleSetKind::Empty; }

  /// Membership against the interval characterization (strict bounds).
  bool contains(double u) const noexcept {
    switch (kind) {
      case FeasibleSetKind::Empty: return false;
      case FeasibleSetKind::AllReals: return true;
      case FeasibleSetKind::OpenHalfLineBelow: return u < upper;
      case FeasibleSetKind::OpenHalfLineAbove: return u > lower;
      case FeasibleSetKind::OpenInterval: return lower < u && u < upper;
    }
    return false;
  }
};

/// Exact residuals of both constraints at a candidate control.
struct FeasibilityReport {
  double F0 = 0.0;  ///< a0 + b0*u
  double F1 = 0.0;  ///< a1 + b1*u
  bool clf_ok = false;  ///< F0 < 0
  bool cbf_ok = false;  ///< F1 < 0

  bool ok() const noexcept { return clf_ok && cbf_ok; }
};

inline FeasibilityReport check(const LieData& d, double u) noexcept {
  const double F0 = d.a0 + d.b0 * u;
  const double F1 = d.a1 + d.b1 * u;
  return {F0, F1, F0 < 0.0, F1 < 0.0};
}

/// Exact case analysis of the two strict affine inequalities. Ratios are
/// computed in plain double arithmetic; b near zero produces +/-Inf bounds,
/// which reproduce the limiting set shapes.
inline FeasibleSet feasible_set(const LieData& d) noexcept {
  constexpr double inf = std::numeric_limits<double>::infinity();
  double lower = -inf;
  double upper = inf;
  bool empty = false;

  const auto intersect = [&](double a, double b) {
    if (b > 0.0) {
      upper = std::min(upper, -(a / b));
    } else if (b < 0.0) {
      lower = std::max(lower, -(a / b));
    } else if (a >= 0.0) {
      empty = true;  // 0*u cannot beat a nonnegative a
    }
  };
  intersect(d.a0, d.b0);
  intersect(d.a1, d.b1);

  if (empty) return {FeasibleSetKind::Empty, lower, upper};
  if (lower == -inf && upper == inf) return {FeasibleSetKind::AllReals, lower, upper};
  if (lower == -inf) return {FeasibleSetKind::OpenHalfLineBelow, lower, upper};
  if (upper == inf) return {FeasibleSetKind::OpenHalfLineAbove, lower, upper};
  if (lower < upper) return {FeasibleSetKind::OpenInterval, lower, upper};
  return {FeasibleSetKind::Empty, lower, upper};
}

/// Brute-force oracle: all points of the uniform n-grid on [lo, hi] whose
/// residuals satisfy both strict inequalities.
inline std::vector<double> grid_search(const LieData& d, double lo, double hi, std::size_t n) {
  if (!(lo < hi) || n < 2) throw DomainError("grid_search: need lo < hi and n >= 2");
  const double step = (hi - lo) / static_cast<double>(n - 1);
  std::vector<double> feasible;
  for (std::size_t k = 0; k < n; ++k) {
    const double u = lo + static_cast<double>(k) * step;
    if (check(d, u).ok()) feasible.push_back(u);
  }
  return feasible;
}

}  // namespace safestab
