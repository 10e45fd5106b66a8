#pragma once

#include <cstdio>
#include <fstream>
#include <string>

#include "safestab/errors.hpp"
#include "safestab/sim.hpp"

namespace safestab {

/// 17 significant digits: parses back to the identical double.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Header "t,x1,...,xn,u,V,h,mode,F0,F1" plus one row per sample.
inline std::string trajectory_csv(const Trajectory& traj) {
  if (traj.times.empty()) throw DomainError("trajectory_csv: empty trajectory");
  const Eigen::Index n = traj.states.front().size();
  std::string out = "t";
  for (Eigen::Index k = 0; k < n; ++k) out += ",x" + std::to_string(k + 1);
  out += ",u,V,h,mode,F0,F1\n";
  for (std::size_t r = 0; r < traj.size(); ++r) {
    out += format_double(traj.times[r]);
    for (Eigen::Index k = 0; k < n; ++k) out += "," + format_double(traj.states[r][k]);
    out += "," + format_double(traj.inputs[r]);
    out += "," + format_double(traj.V_vals[r]);
    out += "," + format_double(traj.h_vals[r]);
    out += "," + std::to_string(static_cast<int>(traj.modes[r]));
    out += "," + format_double(traj.F0_vals[r]);
    out += "," + format_double(traj.F1_vals[r]);
    out += "\n";
  }
  return out;
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open for writing: " + path);
  f << content;
  if (!f) throw ConfigError("write failed: " + path);
}

}  // namespace safestab
