#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <ostream>

#include "bsc/engine/event.hpp"
#include "bsc/orders/stream.hpp"
#include "bsc/warehouse/state.hpp"

namespace bsc {

struct SimConfig {
  std::shared_ptr<const WarehouseLayout> layout;
  std::shared_ptr<Router> router;  // built from layout when null
  BatteryModel battery;
  int num_amrs = 40;
  double initial_battery_pct = 100.0;
  ActionSpace action_space = ActionSpace::full();
  bool interrupt_enabled = false;
  double interrupt_threshold_pct = 50.0;
  int cap_retrieval = 330;
  int cap_delivery = 240;
  std::vector<std::pair<int, int>> initial_fill;  // (sku, count)
  std::ostream* trace = nullptr;                  // one line per processed event
  std::function<void(const SimEvent&, const WarehouseState&)> observer;  // post-event hook
};

/// Request for a charging decision, raised after every completed transport
/// task. `state` views the live (paused) simulation state.
struct DecisionRequest {
  enum class Kind : std::uint8_t { Charging };
  Kind kind = Kind::Charging;
  int amr = -1;
  const WarehouseState* state = nullptr;
};

/// Deterministic discrete-event simulation of one episode. The loop runs the
/// order, travel and charging event chains and pauses whenever a charging
/// decision is required; resume_with() feeds the decision back in.
///
/// Single-threaded per instance; instances share nothing but the layout and
/// the router's read-only distance cache.
class Simulation {
 public:
  Simulation(SimConfig cfg, OrderStream stream);

  /// Advances until the next decision point; nullopt means the episode ended
  /// (all arrivals processed and every chain drained).
  std::optional<DecisionRequest> run_until_decision();

  /// Resolves the pending decision: 0 returns the vehicle to the free pool,
  /// anything else starts a charging trip to that target percentage. The
  /// action must be a member of the configured space and pass the mask.
  void resume_with(ChargeTarget action);

  bool finished() const { return finished_; }
  bool decision_pending() const { return pending_amr_ >= 0; }
  double clock() const { return state_.clock; }
  const WarehouseState& state() const { return state_; }
  const SimConfig& config() const { return cfg_; }
  int order_count() const { return static_cast<int>(state_.orders.size()); }
  /// Orders that arrived but never completed (queued, stranded or in flight
  /// when the episode ended).
  int truncated_orders() const;

 private:
  void schedule(double time, EventKind kind, int order = -1, int amr = -1, int station = -1,
                std::uint64_t token = 0);
  void process(const SimEvent& e);
  void on_order_arrival(const SimEvent& e);
  void on_arrived_at_dock(const SimEvent& e);
  void on_arrived_at_lane(const SimEvent& e);
  void on_released(const SimEvent& e);
  void on_arrived_at_station(const SimEvent& e);
  void on_charge_complete(const SimEvent& e);
  void on_charge_interrupted(const SimEvent& e);

  void try_dispatch();
  void interrupt_scan();
  void assign(Order& order, int amr_id, Cell start);
  void start_leg(AMR& amr, Cell dest, bool loaded, EventKind arrival, int order_id,
                 double delay_s);
  /// Applies the pending leg's consumption; false when the vehicle stranded.
  bool finish_leg(AMR& amr);
  void occupy_station(ChargingStation& st, int amr_id);
  void release_from_station(ChargingStation& st, bool interrupted);
  void set_battery(AMR& amr, double new_ah);
  void finalize();

  SimConfig cfg_;
  WarehouseState state_;
  EventQueue queue_;
  int pending_amr_ = -1;
  bool finished_ = false;
  std::uint64_t charge_token_counter_ = 0;
};

}  // namespace bsc
