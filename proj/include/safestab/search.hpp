#pragma once

#include <cmath>
#include <vector>

#include "safestab/sim.hpp"
#include "safestab/systems.hpp"

namespace safestab {

/// Grid scan for a flagship initial condition. Candidates are visited in
/// lexicographic order (x1 ascending, then x2 ascending), so the result is
/// deterministic for a fixed grid.
struct X0SearchSpec {
  double x1_min = -3.0, x1_max = 3.0, x1_step = 0.5;
  double x2_min = -3.0, x2_max = 3.0, x2_step = 0.5;
  BlendConfig blend{};
  double c = 1e5;
  SimOptions sim{};
};

struct X0SearchResult {
  bool found = false;
  State x0;
  double h0 = 0.0;
  double baseline_min_h = 0.0;    ///< clf_only_sontag, must be < 0
  double kl_min_h = 0.0;          ///< kl_sharp run
  double kl_final_norm = 0.0;
  std::vector<int> mode_pattern;  ///< run-length modes of the kl_sharp run
};

namespace detail {

inline std::vector<int> rle_modes(const SimReport& rep) {
  std::vector<int> pattern;
  for (const auto& [t, m] : rep.mode_transitions) pattern.push_back(static_cast<int>(m));
  return pattern;
}

}  // namespace detail

/// Scans the grid for the first safe x0 where (a) the CLF-only Sontag
/// baseline violates safety and (b) the kl_sharp run shows the
/// compatible -> incompatible -> compatible mode pattern (exactly the
/// three runs 1, 0, 1) over the configured horizon.
inline X0SearchResult find_x0(const SystemBundle& bundle, const X0SearchSpec& spec) {
  X0SearchResult res;
  const auto count = [](double lo, double hi, double step) {
    return static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
  };
  const int n1 = count(spec.x1_min, spec.x1_max, spec.x1_step);
  const int n2 = count(spec.x2_min, spec.x2_max, spec.x2_step);

  ControllerSpec baseline{Law::ClfOnlySontag, spec.blend, spec.c};
  ControllerSpec kl{Law::KLSharp, spec.blend, spec.c};

  State x0(2);
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) {
      x0[0] = spec.x1_min + i * spec.x1_step;
      x0[1] = spec.x2_min + j * spec.x2_step;
      const double h0 = bundle.cbf.h(x0);
      if (!(h0 > 0.0)) continue;

      SimReport base_rep;
      try {
        base_rep = simulate(bundle, baseline, x0, spec.sim).second;
      } catch (const IntegrationError&) {
        continue;  // runaway baseline disqualifies the candidate
      }
      if (!(base_rep.min_h < 0.0)) continue;

      const auto [kl_traj, kl_rep] = simulate(bundle, kl, x0, spec.sim);
      const auto pattern = detail::rle_modes(kl_rep);
      if (pattern != std::vector<int>{1, 0, 1}) continue;

      res.found = true;
      res.x0 = x0;
      res.h0 = h0;
      res.baseline_min_h = base_rep.min_h;
      res.kl_min_h = kl_rep.min_h;
      res.kl_final_norm = kl_rep.final_state_norm;
      res.mode_pattern = pattern;
      return res;
    }
  }
  return res;
}

}  // namespace safestab
