#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <utility>

#include "safestab/errors.hpp"
#include "safestab/lie_data.hpp"
#include "safestab/state.hpp"

namespace safestab {

using ScalarField = std::function<double(const State&)>;
using VectorField = std::function<State(const State&)>;
using ClassKFunction = std::function<double(double)>;

/// Euclidean norm below which a state is classified as the origin.
inline constexpr double kOriginTol = 1e-9;

/// Default central-difference step for the gradient fallback.
inline constexpr double kDefaultFdStep = 1e-6;

/// Single-input control-affine dynamics xdot = f(x) + g(x) u with f(0) = 0.
/// Field handles must be pure, reentrant and total on finite inputs.
struct Dynamics {
  VectorField f;
  VectorField g;
  Eigen::Index n = 0;
};

struct ClfSpec {
  ScalarField V;        ///< positive definite, proper
  VectorField grad_V;   ///< optional; finite-difference fallback when empty
  ScalarField alpha;    ///< positive definite margin term
};

struct CbfSpec {
  ScalarField h;            ///< safe set is {h >= 0}, its interior {h > 0}
  VectorField grad_h;       ///< optional; finite-difference fallback when empty
  ClassKFunction alpha_h;   ///< extended class-K_infinity
};

/// A problem instance: dynamics plus CLF and CBF data of one dimension n,
/// with the origin in the interior of the safe set (h(0) > 0).
struct SystemBundle {
  Dynamics dynamics;
  ClfSpec clf;
  CbfSpec cbf;
  std::string label;
};

namespace detail {

inline double checked_scalar(double v, const char* field) {
  if (!std::isfinite(v))
    throw EvaluationError(field, -1, std::string("non-finite value from field '") + field + "'");
  return v;
}

inline const State& checked_vector(const State& v, const char* field, Eigen::Index n) {
  if (v.size() != n)
    throw EvaluationError(field, v.size(),
                          std::string("field '") + field + "' returned wrong dimension");
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (!std::isfinite(v[k]))
      throw EvaluationError(field, k,
                            std::string("non-finite coordinate ") + std::to_string(k) +
                                " from field '" + field + "'");
  }
  return v;
}

}  // namespace detail

/// Central-difference gradient, entry k = (f(x + s e_k) - f(x - s e_k)) / 2s.
inline State fd_gradient(const ScalarField& field, const State& x, double step = kDefaultFdStep) {
  if (!(step > 0.0)) throw DomainError("fd_gradient: step must be positive");
  State grad(x.size());
  State probe = x;
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    probe[k] = x[k] + step;
    const double up = field(probe);
    probe[k] = x[k] - step;
    const double down = field(probe);
    probe[k] = x[k];
    if (!std::isfinite(up) || !std::isfinite(down))
      throw EvaluationError("fd_gradient", k,
                            "non-finite field value while differencing coordinate " +
                                std::to_string(k));
    grad[k] = (up - down) / (2.0 * step);
  }
  return grad;
}

/// Evaluates the four scalars (a0, b0, a1, b1) of both design inequalities
/// at x. Uses analytic gradients when the bundle carries them.
inline LieData lie_data(const SystemBundle& bundle, const State& x) {
  const Eigen::Index n = bundle.dynamics.n;
  detail::checked_vector(x, "state", n);

  const State f = detail::checked_vector(bundle.dynamics.f(x), "f", n);
  const State g = detail::checked_vector(bundle.dynamics.g(x), "g", n);
  const State grad_V = detail::checked_vector(
      bundle.clf.grad_V ? bundle.clf.grad_V(x) : fd_gradient(bundle.clf.V, x), "grad_V", n);
  const State grad_h = detail::checked_vector(
      bundle.cbf.grad_h ? bundle.cbf.grad_h(x) : fd_gradient(bundle.cbf.h, x), "grad_h", n);
  const double alpha = detail::checked_scalar(bundle.clf.alpha(x), "alpha");
  const double h = detail::checked_scalar(bundle.cbf.h(x), "h");
  const double alpha_h = detail::checked_scalar(bundle.cbf.alpha_h(h), "alpha_h");

  LieData d;
  d.a0 = detail::checked_scalar(grad_V.dot(f) + alpha, "a0");
  d.b0 = detail::checked_scalar(grad_V.dot(g), "b0");
  d.a1 = detail::checked_scalar(-grad_h.dot(f) - alpha_h, "a1");
  d.b1 = detail::checked_scalar(-grad_h.dot(g), "b1");
  d.x_is_origin = x.norm() <= kOriginTol;
  return d;
}

}  // namespace safestab
