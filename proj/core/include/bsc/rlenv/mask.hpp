#pragma once

#include <cstdint>
#include <vector>

#include "bsc/battery/battery.hpp"

namespace bsc {

/// Battery percentage at and below which skipping a charge is forbidden.
inline constexpr double kMandatoryChargeFloorPct = 20.0;

/// Feasibility of a single charge target at the given battery level:
/// a non-zero target is feasible only strictly above the current level, and
/// the no-charge action is invalid at or below the mandatory floor.
inline bool action_valid(int percent, double battery_pct) {
  if (percent == 0) return battery_pct > kMandatoryChargeFloorPct;
  return static_cast<double>(percent) > battery_pct;
}

using ActionMask = std::vector<std::uint8_t>;

/// Mask over the action space; 1 = feasible. At least one entry is always 1.
inline ActionMask action_mask(double battery_pct, const ActionSpace& space) {
  ActionMask mask(space.thresholds.size(), 0);
  for (std::size_t i = 0; i < space.thresholds.size(); ++i)
    mask[i] = action_valid(space.thresholds[i], battery_pct) ? 1 : 0;
  return mask;
}

}  // namespace bsc
