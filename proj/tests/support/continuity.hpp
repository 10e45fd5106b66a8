#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include <safestab/lie_data.hpp>

// Jump-halving harness: a continuous law sampled along a straight line in
// (a0, b0, a1, b1)-space shows first-order decay of the max consecutive
// jump as the sampling step halves.
namespace continuity {

using safestab::LieData;

inline LieData lerp(const LieData& a, const LieData& b, double t) {
  const auto L = [t](double x, double y) { return x + (y - x) * t; };
  return {L(a.a0, b.a0), L(a.b0, b.b0), L(a.a1, b.a1), L(a.b1, b.b1), false};
}

inline double max_jump(const std::function<double(const LieData&)>& law, const LieData& from,
                       const LieData& to, long n) {
  double prev = law(from);
  double worst = 0.0;
  for (long i = 1; i <= n; ++i) {
    const double cur = law(lerp(from, to, static_cast<double>(i) / static_cast<double>(n)));
    worst = std::max(worst, std::abs(cur - prev));
    prev = cur;
  }
  return worst;
}

struct HalvingResult {
  bool ok = false;
  int warmup_levels = 0;
  int levels = 0;
  double first_jump = 0.0;
  double last_jump = 0.0;
  std::string note;
};

/// First refine until the sampling step resolves the steepest feature of
/// the law (jumps of a steep-but-smooth ramp plateau while the whole ramp
/// fits inside one step). From there every halving of the step must at
/// least halve the max jump (2% measurement slack for curvature) until it
/// drops below floor_. A genuine discontinuity never leaves the plateau
/// and fails in the warm-up phase.
inline HalvingResult check_halving(const std::function<double(const LieData&)>& law,
                                   const LieData& from, const LieData& to, long n0 = 64,
                                   int max_levels = 40, double floor_ = 1e-6) {
  HalvingResult res;
  long n = n0;
  double prev = max_jump(law, from, to, n);
  res.first_jump = prev;

  constexpr double slack = 1.02;
  constexpr int max_warmup = 12;
  while (res.warmup_levels < max_warmup && prev >= floor_) {
    const double cur = max_jump(law, from, to, 2 * n);
    if (cur <= 0.5 * prev * slack) break;
    n *= 2;
    prev = cur;
    ++res.warmup_levels;
  }
  if (res.warmup_levels == max_warmup) {
    res.last_jump = prev;
    res.note = "jump stuck near " + std::to_string(prev) + " through " +
               std::to_string(max_warmup) + " refinements";
    return res;
  }

  for (int lvl = 0; lvl < max_levels; ++lvl) {
    if (prev < floor_) {
      res.ok = true;
      res.levels = lvl;
      res.last_jump = prev;
      return res;
    }
    n *= 2;
    const double cur = max_jump(law, from, to, n);
    if (!(cur <= 0.5 * prev * slack)) {
      res.levels = lvl;
      res.last_jump = cur;
      res.note = "jump " + std::to_string(cur) + " did not halve from " + std::to_string(prev);
      return res;
    }
    prev = cur;
  }
  res.ok = prev < floor_;
  res.levels = max_levels;
  res.last_jump = prev;
  return res;
}

}  // namespace continuity
