#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "bsc/orders/stream.hpp"

namespace bsc {

/// Weekly arrival-intensity profile (orders/hour per hour-of-week) plus the
/// SKU mix and the stock coupling needed to keep retrievals feasible.
struct ArrivalProfile {
  std::array<double, 168> delivery_per_hour{};
  std::array<double, 168> retrieval_per_hour{};
  int sku_count = 20;
  double zipf_s = 1.0;
  std::vector<int> initial_fill;  // per-sku pallet count at episode start
  int capacity = 0;               // storage slots; 0 = unchecked
  int input_docks = 4;
  int output_docks = 10;

  double weekly_deliveries() const;
  double weekly_retrievals() const;
};

struct ProfileParams {
  double weekly_orders = 31460.0;  // deliveries + retrievals
  double retrieval_share = 0.5;
  int sku_count = 20;
  double zipf_s = 1.0;
  double initial_fill_days = 2.0;  // stock buffer, in days of retrieval demand
  int capacity = 0;
  int input_docks = 4;
  int output_docks = 10;
  // Retrieval window and its two intra-day peaks (hours).
  double window_open = 6.0, window_close = 22.0;
  double peak1 = 9.0, peak2 = 15.0, peak_width = 2.5;
};

/// Default profile: deliveries uniform around the clock, retrievals bimodal
/// inside the 06:00-22:00 outbound window, identical across weekdays.
ArrivalProfile make_default_profile(const ProfileParams& p);

/// Draws `weeks` weeks of orders as two inhomogeneous Poisson processes
/// (piecewise-constant intensity, exact inversion sampling). Retrieval SKUs
/// are drawn Zipf-weighted among SKUs with positive projected stock, both
/// within the week (episodes replay single weeks from the initial fill) and
/// cumulatively. Deterministic in (profile, weeks, seed).
OrderStream generate(const ArrivalProfile& profile, int weeks, std::uint64_t seed);

}  // namespace bsc
