#pragma once

namespace safestab {

/// Scalar reduction of the two design inequalities at one state. The
/// stabilization constraint reads a0 + b0*u < 0 and the safety constraint
/// a1 + b1*u < 0; every controller in this library is a function of these
/// four numbers (plus, for the sharp laws, the state itself).
struct LieData {
  double a0 = 0.0;  ///< L_f V(x) + alpha(x)
  double b0 = 0.0;  ///< L_g V(x)
  double a1 = 0.0;  ///< -L_f h(x) - alpha_h(h(x))
  double b1 = 0.0;  ///< -L_g h(x)
  bool x_is_origin = false;  ///< |x| <= origin tolerance at evaluation time
};

/// True when b0 and b1 have strictly opposite signs (the only regime where
/// the two constraints can conflict).
inline bool mixed_signs(const LieData& d) noexcept {
  return (d.b0 > 0.0 && d.b1 < 0.0) || (d.b0 < 0.0 && d.b1 > 0.0);
}

}  // namespace safestab
