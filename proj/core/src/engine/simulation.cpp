#include "bsc/engine/simulation.hpp"

#include <algorithm>
#include <cstdio>

#include "bsc/rlenv/mask.hpp"
#include "bsc/strategies/strategies.hpp"
#include "bsc/util/errors.hpp"
#include "bsc/warehouse/heuristics.hpp"

namespace bsc {

const char* event_kind_name(EventKind k) {
  switch (k) {
    case EventKind::OrderArrival: return "OrderArrival";
    case EventKind::AMRArrivedAtDock: return "AMRArrivedAtDock";
    case EventKind::AMRArrivedAtLane: return "AMRArrivedAtLane";
    case EventKind::AMRReleased: return "AMRReleased";
    case EventKind::AMRArrivedAtStation: return "AMRArrivedAtStation";
    case EventKind::ChargeComplete: return "ChargeComplete";
    case EventKind::ChargeInterrupted: return "ChargeInterrupted";
    case EventKind::DecisionRequest: return "DecisionRequest";
  }
  return "?";
}

void EventQueue::push(SimEvent event) {
  if (event.time < floor_)
    throw SimError("schedule into the past: t=" + std::to_string(event.time) +
                   " < clock=" + std::to_string(floor_));
  event.seq = next_seq_++;
  heap_.push(event);
}

SimEvent EventQueue::pop() {
  SimEvent e = heap_.top();
  heap_.pop();
  return e;
}

namespace {

void write_trace(std::ostream& out, const SimEvent& e) {
  char buf[160];
  int n = std::snprintf(buf, sizeof(buf), "%.6f\t%s\t", e.time, event_kind_name(e.kind));
  auto append = [&](const char* key, int v) {
    if (v >= 0) n += std::snprintf(buf + n, sizeof(buf) - n, "%s=%d ", key, v);
  };
  append("order", e.order);
  append("amr", e.amr);
  append("station", e.station);
  if (n > 0 && buf[n - 1] == ' ') --n;
  buf[n] = '\0';
  out << buf << '\n';
}

}  // namespace

Simulation::Simulation(SimConfig cfg, OrderStream stream)
    : cfg_(std::move(cfg)),
      state_(cfg_.layout, cfg_.router ? cfg_.router : std::make_shared<Router>(*cfg_.layout)) {
  if (!cfg_.layout) throw ConfigError("simulation: layout is required");
  if (cfg_.num_amrs < 1) throw ConfigError("simulation: need at least one AMR");
  cfg_.router = state_.router;
  state_.battery = cfg_.battery;
  state_.queues.cap_retrieval = cfg_.cap_retrieval;
  state_.queues.cap_delivery = cfg_.cap_delivery;

  const auto& layout = *cfg_.layout;
  for (int i = 0; i < static_cast<int>(layout.stations().size()); ++i)
    state_.stations.push_back({i, layout.stations()[i]});

  // Vehicles start free, spread round-robin over the dock cells.
  std::vector<Cell> starts = layout.input_docks();
  starts.insert(starts.end(), layout.output_docks().begin(), layout.output_docks().end());
  double fleet_total = 0.0;
  for (int i = 0; i < cfg_.num_amrs; ++i) {
    AMR amr;
    amr.id = i;
    amr.position = starts[i % starts.size()];
    amr.battery_ah = cfg_.battery.ah_of_pct(cfg_.initial_battery_pct);
    fleet_total += amr.battery_ah;
    state_.fleet.push_back(amr);
  }
  state_.metrics.battery_sum_ah = fleet_total;

  // Initial stock, placed with the storage-assignment heuristic as if it had
  // arrived at the first input dock at t=0.
  int fill_total = 0;
  for (const auto& [sku, count] : cfg_.initial_fill) fill_total += count;
  if (fill_total > layout.storage_capacity())
    throw ConfigError("initial fill (" + std::to_string(fill_total) +
                      ") exceeds storage capacity (" + std::to_string(layout.storage_capacity()) +
                      ")");
  for (const auto& [sku, count] : cfg_.initial_fill) {
    for (int i = 0; i < count; ++i) {
      const int lane = slap_assign(state_, sku, layout.input_docks()[0]);
      state_.inventory.reserve_slot(lane);
      state_.inventory.push(lane, {sku, 0.0, state_.inventory.next_uid()});
    }
  }

  // All arrivals are scheduled up front; the heap drives the episode.
  state_.orders.reserve(stream.entries.size());
  for (int i = 0; i < stream.size(); ++i) {
    const auto& e = stream.entries[i];
    if (e.arrival_s < 0)
      throw ConfigError("order " + std::to_string(i) + ": negative arrival time");
    if (i > 0 && e.arrival_s < stream.entries[i - 1].arrival_s)
      throw ConfigError("order stream: arrival times must be non-decreasing (row " +
                        std::to_string(i) + ")");
    const auto& docks =
        e.kind == OrderKind::Delivery ? layout.input_docks() : layout.output_docks();
    if (e.dock < 0 || e.dock >= static_cast<int>(docks.size()))
      throw ConfigError("order " + std::to_string(i) + ": dock index " + std::to_string(e.dock) +
                        " out of range");
    Order o;
    o.id = i;
    o.kind = e.kind;
    o.sku = e.sku;
    o.arrival_s = e.arrival_s;
    o.dock = e.dock;
    state_.orders.push_back(o);
    schedule(e.arrival_s, EventKind::OrderArrival, i);
  }
}

void Simulation::schedule(double time, EventKind kind, int order, int amr, int station,
                          std::uint64_t token) {
  SimEvent e;
  e.time = time;
  e.kind = kind;
  e.order = order;
  e.amr = amr;
  e.station = station;
  e.token = token;
  queue_.push(e);
}

std::optional<DecisionRequest> Simulation::run_until_decision() {
  if (finished_) return std::nullopt;
  if (pending_amr_ >= 0) throw SimError("run_until_decision: a decision is already pending");
  while (!queue_.empty()) {
    const SimEvent e = queue_.pop();
    state_.clock = e.time;
    queue_.set_floor(e.time);
    if (cfg_.trace != nullptr) write_trace(*cfg_.trace, e);
    process(e);
    if (cfg_.observer) cfg_.observer(e, state_);
    if (pending_amr_ >= 0)
      return DecisionRequest{DecisionRequest::Kind::Charging, pending_amr_, &state_};
  }
  finalize();
  return std::nullopt;
}

void Simulation::process(const SimEvent& e) {
  switch (e.kind) {
    case EventKind::OrderArrival: on_order_arrival(e); break;
    case EventKind::AMRArrivedAtDock: on_arrived_at_dock(e); break;
    case EventKind::AMRArrivedAtLane: on_arrived_at_lane(e); break;
    case EventKind::AMRReleased: on_released(e); break;
    case EventKind::AMRArrivedAtStation: on_arrived_at_station(e); break;
    case EventKind::ChargeComplete: on_charge_complete(e); break;
    case EventKind::ChargeInterrupted: on_charge_interrupted(e); break;
    case EventKind::DecisionRequest:
      pending_amr_ = e.amr;
      ++state_.metrics.decisions;
      break;
  }
}

void Simulation::on_order_arrival(const SimEvent& e) {
  Order& o = state_.orders[e.order];
  ++state_.metrics.arrived;
  if (o.kind == OrderKind::Retrieval) {
    state_.queues.push_retrieval(o.id, state_.clock);
    state_.metrics.queue_changed(state_.queues.retrieval_len(), state_.clock);
  } else {
    state_.queues.push_delivery(o.id, state_.clock);
  }
  try_dispatch();
}

void Simulation::try_dispatch() {
  while (true) {
    if (state_.free_amr_count() == 0) {
      if (cfg_.interrupt_enabled && state_.queues.retrieval_len() > 0) interrupt_scan();
      return;
    }
    // Oldest assignable order across both queues (ids grow with arrival time).
    // Retrievals whose SKU has no accessible pallet stay queued and are
    // skipped; the next delivery release re-triggers dispatch.
    auto rit = state_.queues.retrieval.begin();
    auto dit = state_.queues.delivery.begin();
    Order* picked = nullptr;
    std::deque<int>::iterator picked_it;
    int pick_lane = -1;
    while (rit != state_.queues.retrieval.end() || dit != state_.queues.delivery.end()) {
      const bool take_r = dit == state_.queues.delivery.end() ||
                          (rit != state_.queues.retrieval.end() && *rit < *dit);
      if (take_r) {
        Order& o = state_.orders[*rit];
        if (state_.inventory.accessible_count(o.sku) > 0) {
          picked = &o;
          picked_it = rit;
          pick_lane = ulsp_select(state_, o.sku);
          break;
        }
        ++rit;
      } else {
        picked = &state_.orders[*dit];
        picked_it = dit;
        break;
      }
    }
    if (picked == nullptr) return;

    Cell start;
    if (pick_lane >= 0) {
      start = cfg_.layout->slot_cell(cfg_.layout->lane(pick_lane),
                                     state_.inventory.top_slot(pick_lane));
    } else {
      start = cfg_.layout->input_docks()[picked->dock];
    }
    const int amr_id = dispatch_nearest(state_, start);
    if (amr_id < 0) return;  // unreachable given the free-count guard

    if (pick_lane >= 0) {
      state_.queues.retrieval.erase(picked_it);
      state_.metrics.queue_changed(state_.queues.retrieval_len(), state_.clock);
      // The pallet is committed to this order now; it physically leaves at
      // pickup. A later storage assignment may reuse the slot immediately.
      state_.inventory.pop(pick_lane);
      picked->lane = pick_lane;
    } else {
      state_.queues.delivery.erase(picked_it);
    }
    assign(*picked, amr_id, start);
  }
}

void Simulation::assign(Order& order, int amr_id, Cell start) {
  AMR& amr = state_.fleet[amr_id];
  order.state = OrderState::InService;
  order.amr = amr_id;
  amr.status = AmrStatus::Busy;
  amr.order = order.id;
  const EventKind arrival = order.kind == OrderKind::Delivery ? EventKind::AMRArrivedAtDock
                                                              : EventKind::AMRArrivedAtLane;
  start_leg(amr, start, /*loaded=*/false, arrival, order.id, 0.0);
}

void Simulation::start_leg(AMR& amr, Cell dest, bool loaded, EventKind arrival, int order_id,
                           double delay_s) {
  const double dist = state_.router->distance_m(amr.position, dest);
  const double time = dist / cfg_.layout->amr_speed_mps();
  amr.leg = {dest, time, dist, loaded};
  schedule(state_.clock + delay_s + time, arrival, order_id, amr.id,
           arrival == EventKind::AMRArrivedAtStation ? amr.charge.station : -1);
}

bool Simulation::finish_leg(AMR& amr) {
  const double demand = cfg_.battery.consumption_ah(amr.leg.time_s, amr.leg.loaded);
  if (demand > 0.0 && demand >= amr.battery_ah) {
    // Ran dry mid-route: the vehicle strands and whatever it was doing stalls.
    // Unreachable under mask-legal play; kept total so that the simulator
    // never wedges on a bad strategy.
    const double travelled = amr.leg.dist_m * (amr.battery_ah / demand);
    amr.odometer_m += travelled;
    amr.consumed_ah += amr.battery_ah;
    set_battery(amr, 0.0);
    amr.status = AmrStatus::Depleted;
    amr.position = amr.leg.dest;
    ++state_.metrics.stranded_amrs;
    if (amr.order >= 0) {
      state_.orders[amr.order].state = OrderState::Stranded;
      amr.order = -1;
    }
    return false;
  }
  amr.odometer_m += amr.leg.dist_m;
  amr.consumed_ah += demand;
  set_battery(amr, amr.battery_ah - demand);
  amr.position = amr.leg.dest;
  if (amr.order >= 0) {
    state_.orders[amr.order].trip_time_s += amr.leg.time_s;
    state_.orders[amr.order].trip_dist_m += amr.leg.dist_m;
  }
  return true;
}

void Simulation::set_battery(AMR& amr, double new_ah) {
  double total = state_.metrics.battery_sum_ah + (new_ah - amr.battery_ah);
  amr.battery_ah = new_ah;
  state_.metrics.battery_changed(total, state_.clock);
}

void Simulation::on_arrived_at_dock(const SimEvent& e) {
  AMR& amr = state_.fleet[e.amr];
  if (!finish_leg(amr)) return;
  Order& o = state_.orders[e.order];
  if (o.kind == OrderKind::Delivery) {
    // Storage assignment happens at the dock; pick up and carry to the slot.
    const int lane = slap_assign(state_, o.sku, amr.position);
    state_.inventory.reserve_slot(lane);
    o.lane = lane;
    const Cell slot =
        cfg_.layout->slot_cell(cfg_.layout->lane(lane), state_.inventory.next_slot(lane) - 1);
    start_leg(amr, slot, /*loaded=*/true, EventKind::AMRArrivedAtLane, o.id,
              cfg_.layout->handling_s());
  } else {
    // Retrieval reached the output dock; drop the pallet and release.
    schedule(state_.clock + cfg_.layout->handling_s(), EventKind::AMRReleased, o.id, amr.id);
  }
}

void Simulation::on_arrived_at_lane(const SimEvent& e) {
  AMR& amr = state_.fleet[e.amr];
  if (!finish_leg(amr)) return;
  Order& o = state_.orders[e.order];
  if (o.kind == OrderKind::Delivery) {
    // Set the pallet down; the vehicle is released after the handling time.
    schedule(state_.clock + cfg_.layout->handling_s(), EventKind::AMRReleased, o.id, amr.id);
  } else {
    // Pick the pallet and carry it to the order's output dock.
    const Cell dock = cfg_.layout->output_docks()[o.dock];
    start_leg(amr, dock, /*loaded=*/true, EventKind::AMRArrivedAtDock, o.id,
              cfg_.layout->handling_s());
  }
}

void Simulation::on_released(const SimEvent& e) {
  AMR& amr = state_.fleet[e.amr];
  Order& o = state_.orders[e.order];
  if (o.kind == OrderKind::Delivery) {
    state_.inventory.push(o.lane, {o.sku, o.arrival_s, state_.inventory.next_uid()});
  }
  state_.record_completion(o.id, state_.clock);
  amr.order = -1;
  // One charging decision per completed transport task.
  schedule(state_.clock, EventKind::DecisionRequest, -1, amr.id);
}

void Simulation::resume_with(ChargeTarget action) {
  if (pending_amr_ < 0) throw SimError("resume_with: no decision pending");
  AMR& amr = state_.fleet[pending_amr_];
  const double pct = cfg_.battery.pct_of(amr.battery_ah);
  if (cfg_.action_space.index_of(action.percent) < 0)
    throw SimError("resume_with: action " + std::to_string(action.percent) +
                   " is not in the action space");
  if (!action_valid(action.percent, pct))
    throw SimError("resume_with: masked action " + std::to_string(action.percent) +
                   " at battery " + std::to_string(pct) + "%");
  pending_amr_ = -1;
  if (action.percent == 0) {
    amr.status = AmrStatus::Free;
  } else {
    const int station = select_station(state_, amr.position);
    amr.charge.station = station;
    amr.charge.target_pct = action.percent;
    amr.status = AmrStatus::TravellingToStation;
    start_leg(amr, state_.stations[station].position, /*loaded=*/false,
              EventKind::AMRArrivedAtStation, -1, 0.0);
  }
  try_dispatch();
}

void Simulation::on_arrived_at_station(const SimEvent& e) {
  AMR& amr = state_.fleet[e.amr];
  if (!finish_leg(amr)) return;
  ChargingStation& st = state_.stations[amr.charge.station];
  if (st.free()) {
    occupy_station(st, amr.id);
  } else {
    st.queue.push_back(amr.id);
    amr.status = AmrStatus::QueuedAtStation;
  }
}

void Simulation::occupy_station(ChargingStation& st, int amr_id) {
  AMR& amr = state_.fleet[amr_id];
  st.occupant = amr_id;
  amr.status = AmrStatus::Charging;
  amr.charge.station = st.id;
  amr.charge.occupy_t = state_.clock;
  amr.charge.token = ++charge_token_counter_;
  amr.charge.interrupt_scheduled = false;
  const double pct = cfg_.battery.pct_of(amr.battery_ah);
  const double duration = cfg_.battery.charge_duration_s(pct, amr.charge.target_pct);
  schedule(state_.clock + duration, EventKind::ChargeComplete, -1, amr_id, st.id,
           amr.charge.token);
}

void Simulation::release_from_station(ChargingStation& st, bool interrupted) {
  AMR& amr = state_.fleet[st.occupant];
  const double elapsed = state_.clock - amr.charge.occupy_t;
  const double gained = elapsed * cfg_.battery.recharge_rate_ah_per_s();
  const double cap =
      std::min(cfg_.battery.ah_of_pct(amr.charge.target_pct), cfg_.battery.capacity_ah);
  const double new_ah = std::min(amr.battery_ah + gained, cap);
  amr.charged_ah += new_ah - amr.battery_ah;
  set_battery(amr, new_ah);
  amr.status = AmrStatus::Free;
  amr.charge = {};
  st.occupant = -1;
  if (interrupted) ++state_.metrics.charge_interrupts;
  if (!st.queue.empty()) {
    const int head = st.queue.front();
    st.queue.pop_front();
    occupy_station(st, head);
  }
}

void Simulation::on_charge_complete(const SimEvent& e) {
  ChargingStation& st = state_.stations[e.station];
  if (st.occupant < 0) return;  // stale: the session ended earlier
  if (state_.fleet[st.occupant].charge.token != e.token) return;
  release_from_station(st, /*interrupted=*/false);
  try_dispatch();
}

void Simulation::on_charge_interrupted(const SimEvent& e) {
  ChargingStation& st = state_.stations[e.station];
  if (st.occupant < 0) return;
  if (state_.fleet[st.occupant].charge.token != e.token) return;
  release_from_station(st, /*interrupted=*/true);
  try_dispatch();
}

void Simulation::interrupt_scan() {
  StrategyConfig scan_cfg;
  scan_cfg.th_interrupt = cfg_.interrupt_threshold_pct;
  for (int amr_id : bsc::interrupt_scan(state_, scan_cfg, state_.clock)) {
    AMR& amr = state_.fleet[amr_id];
    if (amr.charge.interrupt_scheduled) continue;  // already queued this instant
    amr.charge.interrupt_scheduled = true;
    schedule(state_.clock, EventKind::ChargeInterrupted, -1, amr.id, amr.charge.station,
             amr.charge.token);
  }
}

int Simulation::truncated_orders() const {
  int n = 0;
  for (const auto& o : state_.orders) n += o.state == OrderState::Completed ? 0 : 1;
  return n;
}

void Simulation::finalize() {
  finished_ = true;
  state_.metrics.battery_changed(state_.metrics.battery_sum_ah, state_.clock);
  state_.metrics.queue_changed(state_.queues.retrieval_len(), state_.clock);
}

}  // namespace bsc
