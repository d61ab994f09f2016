#include "bsc/warehouse/state.hpp"

#include <algorithm>

#include "bsc/util/errors.hpp"

namespace bsc {

double WarehouseState::live_battery_ah(const AMR& amr, double now) const {
  if (amr.status != AmrStatus::Charging) return amr.battery_ah;
  const double gained = (now - amr.charge.occupy_t) * battery.recharge_rate_ah_per_s();
  const double cap = std::min(battery.ah_of_pct(amr.charge.target_pct), battery.capacity_ah);
  return std::min(amr.battery_ah + gained, cap);
}

int WarehouseState::free_amr_count() const {
  int n = 0;
  for (const auto& a : fleet) n += a.free() ? 1 : 0;
  return n;
}

int WarehouseState::free_station_count() const {
  int n = 0;
  for (const auto& s : stations) n += s.free() ? 1 : 0;
  return n;
}

int WarehouseState::busy_amr_count() const {
  int n = 0;
  for (const auto& a : fleet) n += a.busy() ? 1 : 0;
  return n;
}

int WarehouseState::depleted_amr_count() const {
  int n = 0;
  for (const auto& a : fleet) n += a.status == AmrStatus::Depleted ? 1 : 0;
  return n;
}

void WarehouseState::record_completion(int order_id, double now) {
  Order& o = orders[order_id];
  if (o.state == OrderState::Completed)
    throw SimError("order " + std::to_string(o.id) + " completed twice");
  o.state = OrderState::Completed;
  o.completion_s = now;
  metrics.st_sum += now - o.arrival_s;
  ++metrics.completed;
  if (o.kind == OrderKind::Retrieval) {
    metrics.retrieval_time_sum += o.trip_time_s;
    metrics.retrieval_dist_sum += o.trip_dist_m;
    ++metrics.retrieval_completed;
  } else {
    metrics.delivery_time_sum += o.trip_time_s;
    metrics.delivery_dist_sum += o.trip_dist_m;
    ++metrics.delivery_completed;
  }
}

}  // namespace bsc
