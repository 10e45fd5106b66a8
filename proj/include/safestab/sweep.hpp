#pragma once

#include <string>

#include "safestab/csv.hpp"
#include "safestab/oracle.hpp"
#include "safestab/plant.hpp"
#include "safestab/priority.hpp"

namespace safestab {

/// Uniform rectangular grid over the (x1, x2) plane.
struct GridSpec {
  double x1_min = -3.0, x1_max = 3.0;
  int x1_count = 101;
  double x2_min = -3.0, x2_max = 3.0;
  int x2_count = 101;
};

inline const char* feasible_kind_name(FeasibleSetKind kind) {
  switch (kind) {
    case FeasibleSetKind::Empty: return "empty";
    case FeasibleSetKind::AllReals: return "all";
    case FeasibleSetKind::OpenHalfLineBelow: return "below";
    case FeasibleSetKind::OpenHalfLineAbove: return "above";
    case FeasibleSetKind::OpenInterval: return "interval";
  }
  return "?";
}

/// Compatibility map over the grid, row order x1-major then x2, one row per
/// grid point:
///   x1,x2,compatible,mode,b0,b1,feasible_lo,feasible_hi,kind
/// Unbounded interval ends are emitted as -inf/inf; the kind column is the
/// sentinel that disambiguates half-line, all-reals and empty sets.
inline std::string sweep_csv(const SystemBundle& bundle, const GridSpec& grid) {
  if (bundle.dynamics.n != 2) throw DomainError("sweep_csv: grid sweep requires a 2-state system");
  if (grid.x1_count < 1 || grid.x2_count < 1)
    throw DomainError("sweep_csv: grid counts must be >= 1");

  const auto coord = [](double lo, double hi, int count, int k) {
    if (count == 1) return lo;
    return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(count - 1);
  };

  std::string out = "x1,x2,compatible,mode,b0,b1,feasible_lo,feasible_hi,kind\n";
  State x(2);
  for (int i = 0; i < grid.x1_count; ++i) {
    for (int j = 0; j < grid.x2_count; ++j) {
      x[0] = coord(grid.x1_min, grid.x1_max, grid.x1_count, i);
      x[1] = coord(grid.x2_min, grid.x2_max, grid.x2_count, j);
      const LieData d = lie_data(bundle, x);
      const FeasibleSet fs = feasible_set(d);
      out += format_double(x[0]);
      out += "," + format_double(x[1]);
      out += "," + std::to_string(compatible(d) ? 1 : 0);
      out += "," + std::to_string(static_cast<int>(mode(d)));
      out += "," + format_double(d.b0);
      out += "," + format_double(d.b1);
      out += "," + format_double(fs.lower);
      out += "," + format_double(fs.upper);
      out += ",";
      out += feasible_kind_name(fs.kind);
      out += "\n";
    }
  }
  return out;
}

}  // namespace safestab
