#pragma once

#include <deque>
#include <string>
#include <vector>

#include "bsc/layout/layout.hpp"

namespace bsc {

/// Linear battery model: constant current draws while moving, constant
/// recharge rate while occupying a station.
struct BatteryModel {
  double capacity_ah = 52.0;
  double draw_loaded_a = 15.0;
  double draw_unloaded_a = 10.0;
  double full_charge_s = 1800.0;  // 0 -> 100%

  double recharge_rate_ah_per_s() const { return capacity_ah / full_charge_s; }

  /// Charge drawn by moving for `travel_time_s` seconds.
  double consumption_ah(double travel_time_s, bool loaded) const {
    return (loaded ? draw_loaded_a : draw_unloaded_a) * travel_time_s / 3600.0;
  }

  /// Seconds to charge from `current_pct` to `target_pct` (both in [0,100]).
  /// target must exceed current; the action mask is expected to prevent the
  /// opposite, so a violation is a caller bug.
  double charge_duration_s(double current_pct, double target_pct) const;

  double pct_of(double ah) const { return ah / capacity_ah * 100.0; }
  double ah_of_pct(double pct) const { return pct / 100.0 * capacity_ah; }
};

/// Charging point with a single plug and a FIFO queue. The queue never holds
/// anyone while the plug is free: the head is promoted immediately.
struct ChargingStation {
  int id = -1;
  Cell position = kNoCell;
  int occupant = -1;  // AMR id, or -1
  std::deque<int> queue;

  bool free() const { return occupant < 0; }
};

/// Charging decision: 0 means "do not charge", any other value is the target
/// battery percentage.
struct ChargeTarget {
  int percent = 0;
};

/// Discrete set of charge targets the decision maker may pick from.
struct ActionSpace {
  std::vector<int> thresholds;

  static ActionSpace full() { return {{0, 30, 40, 50, 60, 70, 80, 90, 100}}; }
  static ActionSpace binary() { return {{0, 100}}; }

  int size() const { return static_cast<int>(thresholds.size()); }
  /// Index of a percent value, or -1 if not a member.
  int index_of(int percent) const;
  std::string name() const { return size() == 2 ? "binary" : "full"; }
};

}  // namespace bsc
