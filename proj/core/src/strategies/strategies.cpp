#include "bsc/strategies/strategies.hpp"

#include "bsc/rlenv/mask.hpp"
#include "bsc/util/errors.hpp"

namespace bsc {

StrategyKind strategy_kind_from_name(const std::string& name) {
  if (name == "fixed") return StrategyKind::Fixed;
  if (name == "opportunity") return StrategyKind::Opportunity;
  if (name == "highlow") return StrategyKind::HighLow;
  if (name == "rl") return StrategyKind::Rl;
  throw ConfigError("unknown strategy '" + name + "' (fixed|opportunity|highlow|rl)");
}

const char* strategy_name(StrategyKind k) {
  switch (k) {
    case StrategyKind::Fixed: return "fixed";
    case StrategyKind::Opportunity: return "opportunity";
    case StrategyKind::HighLow: return "highlow";
    case StrategyKind::Rl: return "rl";
  }
  return "?";
}

void StrategyConfig::validate() const {
  if (kind == StrategyKind::Rl) return;
  if (!(th_lower < th_upper && th_upper <= 100.0))
    throw ConfigError("strategy: need th_lower < th_upper <= 100");
  if (!(th_interrupt > th_lower && th_interrupt <= 100.0))
    throw ConfigError("strategy: need th_lower < th_interrupt <= 100");
  // Mandatory charging at the 20% floor must be able to name a legal target.
  if (th_upper <= kMandatoryChargeFloorPct)
    throw ConfigError("strategy: th_upper must exceed the 20% mandatory floor");
}

namespace {

int round_target(double pct) { return static_cast<int>(pct); }

}  // namespace

ChargeTarget fixed_decide(const WarehouseState& s, int amr_id, const StrategyConfig& cfg) {
  const double pct = s.battery.pct_of(s.fleet[amr_id].battery_ah);
  if (pct <= cfg.th_lower || pct <= kMandatoryChargeFloorPct)
    return {round_target(cfg.th_upper)};
  return {0};
}

ChargeTarget opportunity_decide(const WarehouseState& s, int amr_id) {
  const double pct = s.battery.pct_of(s.fleet[amr_id].battery_ah);
  if (pct <= kMandatoryChargeFloorPct) return {100};
  const bool no_work = s.queues.retrieval_len() == 0 && s.queues.delivery_len() == 0;
  if (s.free_station_count() > 0 && no_work && pct < 100.0) return {100};
  return {0};
}

ChargeTarget highlow_decide(const WarehouseState& s, int amr_id, const StrategyConfig& cfg) {
  const double pct = s.battery.pct_of(s.fleet[amr_id].battery_ah);
  if (pct <= cfg.th_lower || pct <= kMandatoryChargeFloorPct)
    return {s.queues.retrieval_len() > 0 ? round_target(cfg.th_upper) : 100};
  return {0};
}

ChargeTarget heuristic_decide(const WarehouseState& s, int amr_id, const StrategyConfig& cfg) {
  switch (cfg.kind) {
    case StrategyKind::Fixed: return fixed_decide(s, amr_id, cfg);
    case StrategyKind::Opportunity: return opportunity_decide(s, amr_id);
    case StrategyKind::HighLow: return highlow_decide(s, amr_id, cfg);
    case StrategyKind::Rl: break;
  }
  throw SimError("heuristic_decide: not a heuristic strategy");
}

std::vector<int> interrupt_scan(const WarehouseState& s, const StrategyConfig& cfg, double now) {
  std::vector<int> out;
  for (const auto& st : s.stations) {
    if (st.occupant < 0) continue;
    const AMR& amr = s.fleet[st.occupant];
    if (s.live_battery_pct(amr, now) > cfg.th_interrupt) out.push_back(amr.id);
  }
  return out;
}

}  // namespace bsc
