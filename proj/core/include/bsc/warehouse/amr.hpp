#pragma once

#include <cstdint>

#include "bsc/layout/layout.hpp"

namespace bsc {

enum class AmrStatus : std::uint8_t {
  Free,
  Busy,
  TravellingToStation,
  QueuedAtStation,
  Charging,
  Depleted,
};

/// Fleet vehicle. Battery bookkeeping: consumption is applied when a travel
/// leg completes; recharge is credited when the vehicle is released from a
/// station. `consumed_ah`/`charged_ah` accumulate both sides of the ledger.
struct AMR {
  int id = -1;
  Cell position = kNoCell;
  AmrStatus status = AmrStatus::Free;
  double battery_ah = 0.0;
  double odometer_m = 0.0;
  double consumed_ah = 0.0;
  double charged_ah = 0.0;
  int order = -1;  // order being served, when Busy

  // In-flight travel leg; applied at the arrival event.
  struct Leg {
    Cell dest = kNoCell;
    double time_s = 0.0;
    double dist_m = 0.0;
    bool loaded = false;
  } leg;

  // Charging session; token invalidates stale ChargeComplete events.
  struct ChargeSession {
    int station = -1;
    int target_pct = 0;
    double occupy_t = -1.0;
    std::uint64_t token = 0;
    bool interrupt_scheduled = false;
  } charge;

  bool free() const { return status == AmrStatus::Free; }
  bool busy() const { return status == AmrStatus::Busy; }
};

}  // namespace bsc
