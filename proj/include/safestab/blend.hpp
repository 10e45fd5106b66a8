#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "safestab/errors.hpp"
#include "safestab/formulas.hpp"
#include "safestab/lie_data.hpp"

namespace safestab {

/// Index split of a mixed-sign pair: b_i > 0, b_j < 0. The feasible set is
/// then the open interval (-a_j/b_j, -a_i/b_i).
struct IndexSplit {
  int i = 0;
  int j = 1;
};

/// Blending weight family: smooth nondecreasing maps into (0, 1) with
/// limits 0 and 1 at -/+ infinity.
enum class LambdaKind { Logistic, Tanh, Algebraic };

struct BlendConfig {
  FormulaKind formula = FormulaKind::Sontag;
  LambdaKind lambda_kind = LambdaKind::Logistic;
  double eta = 0.5;  ///< convex weight of k_m's interior anchor point, in (0,1)
};

inline IndexSplit split_indices(const LieData& d) {
  if (d.b0 > 0.0 && d.b1 < 0.0) return {0, 1};
  if (d.b0 < 0.0 && d.b1 > 0.0) return {1, 0};
  throw DomainError("split_indices: requires b0*b1 < 0");
}

/// Delta = -a0/b0 - a1/b1, the blending argument of k_l.
inline double delta(const LieData& d) {
  if (d.b0 == 0.0 || d.b1 == 0.0) throw DomainError("delta: requires b0 != 0 and b1 != 0");
  return -(d.a0 / d.b0) - (d.a1 / d.b1);
}

/// Pointwise compatibility of the two inequalities: always true when b0 and
/// b1 do not have strictly opposite signs, otherwise the strict ratio
/// ordering -a_j/b_j < -a_i/b_i. Equivalent to nonemptiness of the feasible
/// set for Lie data produced by a valid CLF/CBF pair.
inline bool compatible(const LieData& d) noexcept {
  if (!mixed_signs(d)) return true;
  const bool zero_first = d.b0 > 0.0;
  const double ai = zero_first ? d.a0 : d.a1;
  const double bi = zero_first ? d.b0 : d.b1;
  const double aj = zero_first ? d.a1 : d.a0;
  const double bj = zero_first ? d.b1 : d.b0;
  return -(aj / bj) < -(ai / bi);
}

/// Evaluates the chosen lambda at z. Values are clamped to
/// [1e-13, 1 - 1e-13] so the codomain stays inside the open interval (0, 1)
/// even where the closed forms round to exactly 0 or 1 in double precision.
inline double lambda_eval(LambdaKind kind, double z) noexcept {
  constexpr double clip = 1e-13;
  double v = 0.5;
  switch (kind) {
    case LambdaKind::Logistic:
      if (z >= 0.0) {
        v = 1.0 / (1.0 + std::exp(-z));
      } else {
        const double e = std::exp(z);
        v = e / (1.0 + e);
      }
      break;
    case LambdaKind::Tanh:
      v = 0.5 * (1.0 + std::tanh(z));
      break;
    case LambdaKind::Algebraic:
      // (z + sqrt(1 + z^2)) / (2 sqrt(1 + z^2)), hypot form for large |z|
      v = 0.5 * (1.0 + z / std::hypot(1.0, z));
      break;
  }
  return std::clamp(v, clip, 1.0 - clip);
}

namespace detail {

/// Shared same-sign / zero branch of k_l and k_m.
inline double k_same_sign(const LieData& d, FormulaKind kind) noexcept {
  if (d.b0 == 0.0 && d.b1 == 0.0) return 0.0;
  const double phi0 = phi(kind, d.a0, d.b0);
  const double phi1 = phi(kind, d.a1, d.b1);
  return (d.b0 >= 0.0 && d.b1 >= 0.0) ? std::min(phi0, phi1) : std::max(phi0, phi1);
}

/// The exact blended value always lies strictly inside (lo, hi), but its
/// double rounding can land on a bound when the weight saturates. Move by
/// ulps until the value is strictly inside with strictly negative residuals
/// on both constraints, so the returned control certifies feasibility.
inline double snap_into_interval(double u, double lo, double hi,
                                 double ai, double bi, double aj, double bj) noexcept {
  constexpr double inf = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 128; ++iter) {
    const bool upper_ok = u < hi && ai + bi * u < 0.0;
    const bool lower_ok = u > lo && aj + bj * u < 0.0;
    if (upper_ok && lower_ok) return u;
    if (!upper_ok && !lower_ok) break;  // interval thinner than a few ulps
    u = std::nextafter(u, upper_ok ? inf : -inf);
  }
  return u;
}

struct MixedParts {
  double ai, bi, aj, bj;
  double lo, hi;      // feasible interval bounds, +/-Inf in the b->0 limits
  double phi_i, phi_j;
};

inline MixedParts mixed_parts(const LieData& d, FormulaKind kind) {
  const IndexSplit s = split_indices(d);
  const double a[2] = {d.a0, d.a1};
  const double b[2] = {d.b0, d.b1};
  MixedParts p{};
  p.ai = a[s.i];
  p.bi = b[s.i];
  p.aj = a[s.j];
  p.bj = b[s.j];
  p.hi = -(p.ai / p.bi);
  p.lo = -(p.aj / p.bj);
  p.phi_i = phi(kind, p.ai, p.bi);
  p.phi_j = phi(kind, p.aj, p.bj);
  return p;
}

}  // namespace detail

/// Lambda-blended safe stabilizing law. Same-sign case: min or max of the
/// two universal-formula values; mixed-sign compatible case: convex
/// combination, with weight lambda(Delta), of the clipped formulas
/// max{phi_i, -a_j/b_j} and min{phi_j, -a_i/b_i}.
inline double k_l(const LieData& d, const BlendConfig& cfg = {}) {
  if (!mixed_signs(d)) return detail::k_same_sign(d, cfg.formula);
  if (!compatible(d)) throw DomainError("k_l: incompatible mixed-sign Lie data");
  const auto p = detail::mixed_parts(d, cfg.formula);
  const double lam = lambda_eval(cfg.lambda_kind, delta(d));
  const double u = (1.0 - lam) * std::max(p.phi_i, p.lo) + lam * std::min(p.phi_j, p.hi);
  return detail::snap_into_interval(u, p.lo, p.hi, p.ai, p.bi, p.aj, p.bj);
}

/// Median-form safe stabilizing law. Same-sign case as k_l; mixed-sign
/// compatible case: min{phi_j, max{phi_i, m}} with the interior anchor
/// m = (1-eta)(-a_i/b_i) + eta(-a_j/b_j). eta = 1/2 recovers the midpoint
/// Delta/2 of the feasible interval.
inline double k_m(const LieData& d, const BlendConfig& cfg = {}) {
  if (!(cfg.eta > 0.0 && cfg.eta < 1.0)) throw DomainError("k_m: eta must lie in (0,1)");
  if (!mixed_signs(d)) return detail::k_same_sign(d, cfg.formula);
  if (!compatible(d)) throw DomainError("k_m: incompatible mixed-sign Lie data");
  const auto p = detail::mixed_parts(d, cfg.formula);
  const double anchor = (1.0 - cfg.eta) * p.hi + cfg.eta * p.lo;
  const double u = std::min(p.phi_j, std::max(p.phi_i, anchor));
  return detail::snap_into_interval(u, p.lo, p.hi, p.ai, p.bi, p.aj, p.bj);
}

}  // namespace safestab
