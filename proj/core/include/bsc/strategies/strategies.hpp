#pragma once

#include <string>
#include <vector>

#include "bsc/warehouse/state.hpp"

namespace bsc {

enum class StrategyKind : std::uint8_t { Fixed, Opportunity, HighLow, Rl };

StrategyKind strategy_kind_from_name(const std::string& name);
const char* strategy_name(StrategyKind k);

/// Parameters of the heuristic charging strategies. All of them honour the
/// mandatory 20% floor: at or below it they always charge, whatever the
/// trigger threshold says, so their output is always mask-legal.
struct StrategyConfig {
  StrategyKind kind = StrategyKind::Fixed;
  double th_lower = 20.0;
  double th_upper = 100.0;
  double th_interrupt = 50.0;
  bool interrupt_enabled = false;

  void validate() const;
};

/// Fixed-threshold: charge to th_upper at or below th_lower, else nothing.
ChargeTarget fixed_decide(const WarehouseState& s, int amr_id, const StrategyConfig& cfg);

/// Opportunity: full charge when a station is free and no work is pending
/// (or when the mandatory floor forces it), else nothing.
ChargeTarget opportunity_decide(const WarehouseState& s, int amr_id);

/// HighLow: at or below th_lower, charge to th_upper when retrievals are
/// queued, otherwise fully; above it, nothing.
ChargeTarget highlow_decide(const WarehouseState& s, int amr_id, const StrategyConfig& cfg);

/// Dispatch for the configured kind (Rl is not a heuristic and is rejected).
ChargeTarget heuristic_decide(const WarehouseState& s, int amr_id, const StrategyConfig& cfg);

/// Charging AMRs whose live battery exceeds th_interrupt; the engine calls
/// this when retrievals are pending and no vehicle is free, and releases the
/// returned vehicles at the current time.
std::vector<int> interrupt_scan(const WarehouseState& s, const StrategyConfig& cfg, double now);

}  // namespace bsc
