#pragma once

#include <vector>

#include "bsc/warehouse/state.hpp"

namespace bsc {

using Observation = std::vector<double>;

/// Divisors that map unbounded features into [0,1]. Zero-initialized caps are
/// filled from the layout (diameter for distances, diameter over speed for
/// times) by `fill_default_caps`.
struct FeatureCaps {
  double time_cap_s = 0.0;
  double dist_cap_m = 0.0;
  int sku_count = 0;

  void fill_defaults(const WarehouseLayout& layout, int sku_count_hint);
};

int observation_size(int num_amrs, int num_stations);

/// Flat feature vector, every component in [0,1]:
///   [0]      mean battery level, whole fleet
///   [1]      mean battery level, busy vehicles (0 when none is busy)
///   [2..+C)  battery of each station's occupant (0 when idle)
///   [..+V)   per-vehicle battery, id order
///   [..+3)   depleted / free / busy fleet fractions
///   [+1]     fleet utilization
///   [+1]     warehouse fill level (1 - occupied/total)
///   [..+C)   station queue lengths / fleet size
///   [..+2)   retrieval and delivery queue loads (vs caps, clipped)
///   [..+2)   hour-of-day sin/cos, remapped to [0,1]
///   [+1]     day-of-week / 7
///   [+1]     free-station fraction
///   [+1]     mean lane entropy / ln(#SKUs)
///   [..+2)   mean travel time of completed retrievals | deliveries
///   [..+2)   mean travel distance of completed retrievals | deliveries
/// Battery entries use live values (charging accrual included).
Observation observe(const WarehouseState& s, double now, const FeatureCaps& caps);

}  // namespace bsc
