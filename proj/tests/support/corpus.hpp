#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include <safestab/blend.hpp>
#include <safestab/lie_data.hpp>

// Randomized Lie-data families used by the unit and acceptance suites.
// Components are drawn from [-10, 10]; rows with b = 0 resample their a
// negative so the data could come from a valid CLF/CBF pair.
namespace corpus {

using safestab::LieData;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }
  double nonzero_mag(double hi = 10.0) {
    double v = 0.0;
    while (v == 0.0) v = uniform(0.0, hi);
    return v;
  }
  bool coin() { return std::bernoulli_distribution(0.5)(gen_); }
  std::mt19937_64& gen() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

inline LieData general(Rng& r) {
  LieData d;
  d.a0 = r.uniform(-10, 10);
  d.b0 = r.uniform(-10, 10);
  d.a1 = r.uniform(-10, 10);
  d.b1 = r.uniform(-10, 10);
  return d;
}

/// b0 and b1 share a sign; ~30% of draws set one b to zero (with a < 0).
inline LieData same_sign(Rng& r) {
  const double s = r.coin() ? 1.0 : -1.0;
  LieData d;
  d.a0 = r.uniform(-10, 10);
  d.a1 = r.uniform(-10, 10);
  d.b0 = s * r.nonzero_mag();
  d.b1 = s * r.nonzero_mag();
  const double p = r.uniform(0.0, 1.0);
  if (p < 0.15) {
    d.b0 = 0.0;
    do { d.a0 = r.uniform(-10.0, 0.0); } while (d.a0 == 0.0);
  } else if (p < 0.3) {
    d.b1 = 0.0;
    do { d.a1 = r.uniform(-10.0, 0.0); } while (d.a1 == 0.0);
  }
  return d;
}

/// Both b rows zero; both inequalities must then hold unconditionally.
inline LieData zero_b(Rng& r) {
  LieData d;
  do { d.a0 = r.uniform(-10.0, 0.0); } while (d.a0 == 0.0);
  do { d.a1 = r.uniform(-10.0, 0.0); } while (d.a1 == 0.0);
  d.b0 = 0.0;
  d.b1 = 0.0;
  return d;
}

/// Strictly opposite signs, no compatibility filter.
inline LieData mixed(Rng& r) {
  LieData d;
  d.a0 = r.uniform(-10, 10);
  d.a1 = r.uniform(-10, 10);
  const double b_pos = r.nonzero_mag();
  const double b_neg = -r.nonzero_mag();
  if (r.coin()) {
    d.b0 = b_pos;
    d.b1 = b_neg;
  } else {
    d.b0 = b_neg;
    d.b1 = b_pos;
  }
  return d;
}

inline double interval_gap(const LieData& d) {
  const auto s = safestab::split_indices(d);
  const double a[2] = {d.a0, d.a1};
  const double b[2] = {d.b0, d.b1};
  const double hi = -(a[s.i] / b[s.i]);
  const double lo = -(a[s.j] / b[s.j]);
  return hi - lo;
}

inline LieData mixed_compatible(Rng& r, double min_gap = 1e-9) {
  for (;;) {
    const LieData d = mixed(r);
    if (safestab::compatible(d) && interval_gap(d) >= min_gap) return d;
  }
}

inline LieData mixed_incompatible(Rng& r) {
  for (;;) {
    const LieData d = mixed(r);
    if (!safestab::compatible(d)) return d;
  }
}

/// Mixed-sign data with the two ratios engineered |hi - lo| = gap apart,
/// gap log-uniform in [1e-9, 1e-3]; either ordering.
inline LieData near_tie(Rng& r, bool compatible_side) {
  const double gap = std::pow(10.0, r.uniform(-9.0, -3.0));
  const double mid = r.uniform(-5.0, 5.0);
  const double hi = compatible_side ? mid + 0.5 * gap : mid - 0.5 * gap;
  const double lo = compatible_side ? mid - 0.5 * gap : mid + 0.5 * gap;
  const double bi = r.nonzero_mag(2.0);
  const double bj = -r.nonzero_mag(2.0);
  LieData d;
  if (r.coin()) {
    d.b0 = bi;
    d.a0 = -hi * bi;
    d.b1 = bj;
    d.a1 = -lo * bj;
  } else {
    d.b1 = bi;
    d.a1 = -hi * bi;
    d.b0 = bj;
    d.a0 = -lo * bj;
  }
  return d;
}

}  // namespace corpus
