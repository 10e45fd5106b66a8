#pragma once

#include <algorithm>
#include <cmath>

namespace safestab {

/// Universal-formula choice applied to a Lie-data pair (a, b).
enum class FormulaKind { Sontag, Freeman };

/// Sontag's universal formula -(a + sqrt(a^2 + b^4)) / b, with value 0 at
/// b = 0. Guarantees a + b * phi = -sqrt(a^2 + b^4) < 0 whenever b != 0.
inline double phi_sontag(double a, double b) noexcept {
  if (b == 0.0) return 0.0;
  const double b2 = b * b;
  const double s = std::hypot(a, b2);  // sqrt(a^2 + b^4) without overflow
  // conjugate form avoids cancellation in a + s when a < 0
  const double num = a >= 0.0 ? a + s : b2 * (b2 / (s - a));
  return -num / b;
}

/// Freeman/pointwise-min-norm formula -max{a + b^2, 0} / b, 0 at b = 0.
inline double phi_freeman(double a, double b) noexcept {
  if (b == 0.0) return 0.0;
  return -std::max(a + b * b, 0.0) / b;
}

inline double phi(FormulaKind kind, double a, double b) noexcept {
  return kind == FormulaKind::Sontag ? phi_sontag(a, b) : phi_freeman(a, b);
}

/// Smooth overapproximation of max{s, 0}: eps * ln(1 + e^{s/eps}).
/// Exceeds the exact max by at most eps * ln 2, attained at s = 0.
inline double smooth_max0(double s, double eps) noexcept {
  const double z = s / eps;
  if (z > 0.0) return s + eps * std::log1p(std::exp(-z));
  return eps * std::log1p(std::exp(z));
}

/// Smooth max via max{x, y} = y + max{x - y, 0}.
inline double smooth_max(double x, double y, double eps) noexcept {
  return y + smooth_max0(x - y, eps);
}

/// Smooth min via min{x, y} = y - max{y - x, 0}.
inline double smooth_min(double x, double y, double eps) noexcept {
  return y - smooth_max0(y - x, eps);
}

}  // namespace safestab
