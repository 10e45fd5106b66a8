#pragma once

#include <algorithm>
#include <cmath>

#include "safestab/blend.hpp"
#include "safestab/errors.hpp"
#include "safestab/oracle.hpp"
#include "safestab/state.hpp"

namespace safestab {

struct SafetyPriorityConfig {
  BlendConfig blend{};
  double c = 1e5;  ///< origin-weight sharpness of mu_c(x) = 1 / (1 + c|x|^2)
};

/// Per-state compatibility indicator: 1 while a single input can satisfy
/// both inequalities, 0 where safety must be prioritized.
enum class ModeFlag : int { Incompatible = 0, Compatible = 1 };

inline ModeFlag mode(const LieData& d) noexcept {
  return (mixed_signs(d) && !compatible(d)) ? ModeFlag::Incompatible : ModeFlag::Compatible;
}

namespace detail {

inline double boundary_tracking_control(const LieData& d, const char* who) {
  // Incompatible mixed-sign data keeps b1 away from zero for any valid
  // CLF/CBF pair; hitting this guard means the supplied pair is not one.
  if (std::abs(d.b1) < 1e-12)
    throw InternalInconsistencyError(std::string(who) + ": incompatible data with b1 ~ 0");
  return -(d.a1 / d.b1);
}

}  // namespace detail

/// Safety-prioritizing variant of k_l: where the compatibility condition
/// fails, pins the safety residual to zero (u = -a1/b1) so the state slides
/// toward the safe-set boundary without crossing it.
inline double k_l_star(const LieData& d, const BlendConfig& cfg = {}) {
  if (mixed_signs(d) && !compatible(d))
    return detail::boundary_tracking_control(d, "k_l_star");
  return k_l(d, cfg);
}

/// Safety-prioritizing variant of k_m; its incompatible branch collapses to
/// the same boundary-tracking control -a1/b1.
inline double k_m_star(const LieData& d, const BlendConfig& cfg = {}) {
  if (mixed_signs(d) && !compatible(d))
    return detail::boundary_tracking_control(d, "k_m_star");
  return k_m(d, cfg);
}

/// Origin weight in (0, 1]: 1 at the origin, -> 0 as |x| grows.
inline double mu_c(const State& x, double c) {
  if (!(c > 0.0)) throw DomainError("mu_c: c must be positive");
  return 1.0 / (1.0 + c * x.squaredNorm());
}

/// Everywhere-continuous law: blends k_l_star with the plain stabilizer
/// phi0 = phi(a0, b0) using the origin weight, so the value at x = 0 is 0.
inline double k_l_sharp(const LieData& d, const State& x, const SafetyPriorityConfig& cfg = {}) {
  const double mu = mu_c(x, cfg.c);
  const double phi0 = phi(cfg.blend.formula, d.a0, d.b0);
  return (1.0 - mu) * k_l_star(d, cfg.blend) + mu * phi0;
}

/// k_m counterpart of k_l_sharp.
inline double k_m_sharp(const LieData& d, const State& x, const SafetyPriorityConfig& cfg = {}) {
  const double mu = mu_c(x, cfg.c);
  const double phi0 = phi(cfg.blend.formula, d.a0, d.b0);
  return (1.0 - mu) * k_m_star(d, cfg.blend) + mu * phi0;
}

/// Minimum-|u| element of the closure of the feasible set, shifted into the
/// open set when the minimizer lies on a boundary. Benchmarking plumbing,
/// not covered by the continuity results.
inline double min_norm_baseline(const LieData& d) {
  // At x = 0 both CLF rows vanish (a0 = b0 = 0) and the strict set is
  // empty; the origin flag short-circuits that degenerate case to u = 0.
  if (d.x_is_origin) return 0.0;
  const FeasibleSet fs = feasible_set(d);
  switch (fs.kind) {
    case FeasibleSetKind::Empty:
      throw DomainError("min_norm_baseline: empty feasible set");
    case FeasibleSetKind::AllReals:
      return 0.0;
    case FeasibleSetKind::OpenHalfLineBelow: {
      if (fs.upper > 0.0) return 0.0;
      return fs.upper - 1e-9 * std::max(1.0, std::abs(fs.upper));
    }
    case FeasibleSetKind::OpenHalfLineAbove: {
      if (fs.lower < 0.0) return 0.0;
      return fs.lower + 1e-9 * std::max(1.0, std::abs(fs.lower));
    }
    case FeasibleSetKind::OpenInterval: {
      if (fs.lower < 0.0 && fs.upper > 0.0) return 0.0;
      const double margin = 1e-9 * (fs.upper - fs.lower);
      return fs.lower >= 0.0 ? fs.lower + margin : fs.upper - margin;
    }
  }
  throw DomainError("min_norm_baseline: unreachable");
}

}  // namespace safestab
