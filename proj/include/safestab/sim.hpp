#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "safestab/oracle.hpp"
#include "safestab/plant.hpp"
#include "safestab/priority.hpp"

namespace safestab {

enum class Law {
  KL,
  KM,
  KLStar,
  KMStar,
  KLSharp,
  KMSharp,
  ClfOnlySontag,   ///< phi_S(a0, b0), ignores the barrier
  ClfOnlyFreeman,  ///< phi_F(a0, b0), ignores the barrier
  MinNormBaseline, ///< minimum-|u| element of the feasible set
};

struct ControllerSpec {
  Law law = Law::KLSharp;
  BlendConfig blend{};
  double c = 1e5;  ///< origin-weight sharpness; used by the sharp laws only
};

/// Control value of any law at one state. d must be the Lie data of x.
inline double eval_control(const ControllerSpec& ctrl, const LieData& d, const State& x) {
  const SafetyPriorityConfig sp{ctrl.blend, ctrl.c};
  switch (ctrl.law) {
    case Law::KL: return k_l(d, ctrl.blend);
    case Law::KM: return k_m(d, ctrl.blend);
    case Law::KLStar: return k_l_star(d, ctrl.blend);
    case Law::KMStar: return k_m_star(d, ctrl.blend);
    case Law::KLSharp: return k_l_sharp(d, x, sp);
    case Law::KMSharp: return k_m_sharp(d, x, sp);
    case Law::ClfOnlySontag: return phi_sontag(d.a0, d.b0);
    case Law::ClfOnlyFreeman: return phi_freeman(d.a0, d.b0);
    case Law::MinNormBaseline: return min_norm_baseline(d);
  }
  throw DomainError("eval_control: unknown law");
}

/// Uniformly sampled closed-loop signals. All sequences share one length;
/// times are k * dt.
struct Trajectory {
  std::vector<double> times;
  std::vector<State> states;
  std::vector<double> inputs;
  std::vector<double> V_vals;
  std::vector<double> h_vals;
  std::vector<ModeFlag> modes;
  std::vector<double> F0_vals;
  std::vector<double> F1_vals;

  std::size_t size() const noexcept { return times.size(); }
};

struct SimReport {
  double min_h = std::numeric_limits<double>::infinity();
  bool safety_violated = false;  ///< min_h < 0
  double final_state_norm = std::numeric_limits<double>::quiet_NaN();
  bool converged = false;
  std::vector<std::pair<double, ModeFlag>> mode_transitions;
};

struct SimOptions {
  double dt = 1e-3;
  double t_end = 10.0;
  double stop_tol = 1e-6;   ///< early stop (within-run convergence) on |x|
  double conv_tol = 1e-3;   ///< final |x| below this counts as converged
  double h_abort = 1.0;     ///< barrier depth that may abort a run early
  bool abort_on_safety = false;  ///< stop at h < -h_abort instead of running to t_end
};

/// Classical fixed-step RK4 for xdot = f(x) + g(x) u with u held constant
/// over the step (zero-order hold).
inline State rk4_step(const Dynamics& dyn, const State& x, double u, double dt) {
  if (!(dt > 0.0)) throw DomainError("rk4_step: dt must be positive");
  const auto deriv = [&](const State& s) -> State { return dyn.f(s) + dyn.g(s) * u; };
  const State k1 = deriv(x);
  const State k2 = deriv(x + (0.5 * dt) * k1);
  const State k3 = deriv(x + (0.5 * dt) * k2);
  const State k4 = deriv(x + dt * k3);
  return x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

/// Run-length encoding of the mode signal: one (time, mode) entry per
/// maximal run.
inline std::vector<std::pair<double, ModeFlag>> mode_transitions(const Trajectory& traj) {
  if (traj.times.empty()) throw DomainError("mode_transitions: empty trajectory");
  std::vector<std::pair<double, ModeFlag>> runs;
  for (std::size_t k = 0; k < traj.modes.size(); ++k) {
    if (k == 0 || traj.modes[k] != traj.modes[k - 1])
      runs.emplace_back(traj.times[k], traj.modes[k]);
  }
  return runs;
}

/// Closed-loop integration. Records state, input, V, h, mode and both
/// residuals at every sample (including t = 0 and the final state), then
/// integrates with RK4. Controller domain errors surface as
/// IntegrationError carrying the step index and timestamp.
inline std::pair<Trajectory, SimReport> simulate(const SystemBundle& bundle,
                                                 const ControllerSpec& ctrl, const State& x0,
                                                 const SimOptions& opt = {}) {
  if (!(opt.dt > 0.0) || !(opt.t_end >= opt.dt))
    throw DomainError("simulate: need 0 < dt <= t_end");
  const auto steps = static_cast<std::size_t>(std::floor(opt.t_end / opt.dt + 1e-9));

  Trajectory traj;
  traj.times.reserve(steps + 1);
  traj.states.reserve(steps + 1);

  SimReport rep;
  State x = x0;
  for (std::size_t k = 0;; ++k) {
    const double t = static_cast<double>(k) * opt.dt;
    LieData d;
    double u = 0.0;
    try {
      d = lie_data(bundle, x);
      u = eval_control(ctrl, d, x);
    } catch (const DomainError& e) {
      throw IntegrationError(k, t, "controller failed at t=" + std::to_string(t) + ": " + e.what());
    }
    const double h = bundle.cbf.h(x);
    traj.times.push_back(t);
    traj.states.push_back(x);
    traj.inputs.push_back(u);
    traj.V_vals.push_back(bundle.clf.V(x));
    traj.h_vals.push_back(h);
    traj.modes.push_back(mode(d));
    traj.F0_vals.push_back(d.a0 + d.b0 * u);
    traj.F1_vals.push_back(d.a1 + d.b1 * u);
    rep.min_h = std::min(rep.min_h, h);

    if (x.norm() < opt.stop_tol) {
      rep.converged = true;
      break;
    }
    if (opt.abort_on_safety && h < -opt.h_abort) break;
    if (k == steps) break;

    x = rk4_step(bundle.dynamics, x, u, opt.dt);
    if (!x.allFinite())
      throw IntegrationError(k, t, "state became non-finite after step " + std::to_string(k));
  }

  rep.safety_violated = rep.min_h < 0.0;
  rep.final_state_norm = traj.states.back().norm();
  rep.converged = rep.converged || rep.final_state_norm < opt.conv_tol;
  rep.mode_transitions = mode_transitions(traj);
  return {std::move(traj), rep};
}

inline std::pair<Trajectory, SimReport> simulate(const SystemBundle& bundle,
                                                 const ControllerSpec& ctrl, const State& x0,
                                                 double dt, double t_end) {
  SimOptions opt;
  opt.dt = dt;
  opt.t_end = t_end;
  return simulate(bundle, ctrl, x0, opt);
}

}  // namespace safestab
