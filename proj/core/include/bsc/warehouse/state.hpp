#pragma once

#include <memory>
#include <vector>

#include "bsc/battery/battery.hpp"
#include "bsc/layout/routing.hpp"
#include "bsc/warehouse/amr.hpp"
#include "bsc/warehouse/inventory.hpp"
#include "bsc/warehouse/order.hpp"
#include "bsc/warehouse/queues.hpp"

namespace bsc {

/// Running episode statistics. Queue and battery traces are integrated as
/// step functions between mutation events.
struct MetricsAccum {
  // Service times over completed orders.
  double st_sum = 0.0;
  int completed = 0;
  // Per-kind travel statistics of completed orders (feature + report inputs).
  double retrieval_time_sum = 0.0, retrieval_dist_sum = 0.0;
  double delivery_time_sum = 0.0, delivery_dist_sum = 0.0;
  int retrieval_completed = 0, delivery_completed = 0;
  // Time-weighted traces.
  int max_retrieval_queue = 0;
  double retrieval_queue_integral = 0.0;
  double last_queue_change_t = 0.0;
  double battery_sum_ah = 0.0;  // current fleet total
  double battery_integral = 0.0;
  double last_battery_change_t = 0.0;
  // Counters.
  int arrived = 0;
  int stranded_amrs = 0;
  int charge_interrupts = 0;
  int decisions = 0;

  double avg_service_time() const { return completed > 0 ? st_sum / completed : 0.0; }

  void queue_changed(int retrieval_len, double now) {
    retrieval_queue_integral += last_queue_len_ * (now - last_queue_change_t);
    last_queue_change_t = now;
    last_queue_len_ = retrieval_len;
    if (retrieval_len > max_retrieval_queue) max_retrieval_queue = retrieval_len;
  }
  void battery_changed(double fleet_total_ah, double now) {
    battery_integral += battery_sum_ah * (now - last_battery_change_t);
    last_battery_change_t = now;
    battery_sum_ah = fleet_total_ah;
  }

 private:
  int last_queue_len_ = 0;
};

/// The single source of truth mutated by simulation events.
struct WarehouseState {
  std::shared_ptr<const WarehouseLayout> layout;
  std::shared_ptr<Router> router;
  BatteryModel battery;

  std::vector<AMR> fleet;
  std::vector<ChargingStation> stations;
  Inventory inventory;
  OrderQueues queues;
  std::vector<Order> orders;
  MetricsAccum metrics;
  double clock = 0.0;

  WarehouseState(std::shared_ptr<const WarehouseLayout> l, std::shared_ptr<Router> r)
      : layout(std::move(l)), router(std::move(r)), inventory(*layout) {}

  /// Battery including in-progress charging accrual (capped at the session
  /// target); equals the stored value for non-charging vehicles.
  double live_battery_ah(const AMR& amr, double now) const;
  double live_battery_pct(const AMR& amr, double now) const {
    return battery.pct_of(live_battery_ah(amr, now));
  }

  int free_amr_count() const;
  int free_station_count() const;
  int busy_amr_count() const;
  int depleted_amr_count() const;

  /// Marks an in-service order complete and accumulates its statistics.
  void record_completion(int order_id, double now);
};

}  // namespace bsc
