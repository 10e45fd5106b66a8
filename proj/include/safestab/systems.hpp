#pragma once

#include <cmath>
#include <string>

#include "safestab/plant.hpp"

namespace safestab {

/// Parameters of the bundled two-state example system.
struct ExampleParams {
  double k1 = 1.0;   ///< CLF margin gain on x1^2
  double k2 = 2.0;   ///< CLF margin gain on sigma^2
  double q = 8.0;    ///< curvature of the parabolic constraint
  double d1 = 0.5;   ///< parabola apex abscissa
  double d2 = 1.1;   ///< parabola offset, h(0) = q d1^2 + d2 > 0
};

/// Bundled open-loop-unstable example
///   x1' = x1 + sin x1 + x2,
///   x2' = x1^3 + (1 + x1^2) u,
/// with V = x1^2/2 + sigma^2/2 for sigma = x2 + (k1+1) x1 + sin x1,
/// margin alpha = (k1 x1^2 + k2 sigma^2)/2, and barrier
/// h = x2 + q (x1 - d1)^2 + d2 with alpha_h(s) = s. Gradients are analytic.
inline SystemBundle builtin_example(const ExampleParams& p = {}) {
  if (!(p.k1 > 0.0 && p.k2 > 0.0 && p.q > 0.0))
    throw DomainError("builtin_example: k1, k2, q must be positive");
  const double k1 = p.k1, k2 = p.k2, q = p.q, d1 = p.d1, d2 = p.d2;
  const auto sigma = [k1](const State& x) { return x[1] + (k1 + 1.0) * x[0] + std::sin(x[0]); };

  SystemBundle b;
  b.label = "paper_example";
  b.dynamics.n = 2;
  b.dynamics.f = [](const State& x) {
    State out(2);
    out << x[0] + std::sin(x[0]) + x[1], x[0] * x[0] * x[0];
    return out;
  };
  b.dynamics.g = [](const State& x) {
    State out(2);
    out << 0.0, 1.0 + x[0] * x[0];
    return out;
  };
  b.clf.V = [sigma](const State& x) {
    const double s = sigma(x);
    return 0.5 * x[0] * x[0] + 0.5 * s * s;
  };
  b.clf.grad_V = [k1, sigma](const State& x) {
    const double s = sigma(x);
    State out(2);
    out << x[0] + s * (k1 + 1.0 + std::cos(x[0])), s;
    return out;
  };
  b.clf.alpha = [k1, k2, sigma](const State& x) {
    const double s = sigma(x);
    return 0.5 * (k1 * x[0] * x[0] + k2 * s * s);
  };
  b.cbf.h = [q, d1, d2](const State& x) {
    const double e = x[0] - d1;
    return x[1] + q * e * e + d2;
  };
  b.cbf.grad_h = [q, d1](const State& x) {
    State out(2);
    out << 2.0 * q * (x[0] - d1), 1.0;
    return out;
  };
  b.cbf.alpha_h = [](double s) { return s; };
  return b;
}

/// Looks up a bundled system by CLI name.
inline SystemBundle make_system(const std::string& name, const ExampleParams& p = {}) {
  if (name == "paper_example") return builtin_example(p);
  throw DomainError("unknown system: '" + name + "' (available: paper_example)");
}

}  // namespace safestab
