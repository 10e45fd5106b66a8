#pragma once

// Frozen flagship scenario constants, shared by the unit tests and the
// acceptance suite. configs/flagship.cfg must stay in sync (test_config
// checks this).
namespace flagship {

inline constexpr double kX0_1 = 0.5;
inline constexpr double kX0_2 = -1.0;
inline constexpr double kDt = 1e-3;
inline constexpr double kTEnd = 10.0;
inline constexpr double kC = 1e5;

// [search] horizon: the strict 1 -> 0 -> 1 scan needs the longer window
// because on this plant every qualifying slide takes ~12 s to traverse the
// slow stretch of the barrier.
inline constexpr double kSearchTEnd = 30.0;

}  // namespace flagship
