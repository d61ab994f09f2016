#include "bsc/warehouse/heuristics.hpp"

#include <limits>

#include "bsc/util/errors.hpp"

namespace bsc {

int slap_assign(const WarehouseState& s, int sku, Cell from_dock) {
  const auto& layout = *s.layout;
  const auto field = s.router->field_from(from_dock);
  int best_pure = -1, best_open = -1;
  double best_pure_d = std::numeric_limits<double>::infinity();
  double best_open_d = std::numeric_limits<double>::infinity();
  for (const auto& lane : layout.lanes()) {
    if (s.inventory.lane_free_slots(lane.id) <= 0) continue;
    const Cell slot = layout.slot_cell(lane, s.inventory.next_slot(lane.id));
    const double d = s.router->distance_via_field(*field, slot);
    if (d < best_open_d) {
      best_open_d = d;
      best_open = lane.id;
    }
    if (s.inventory.lane_pure_for(lane.id, sku) && d < best_pure_d) {
      best_pure_d = d;
      best_pure = lane.id;
    }
  }
  if (best_pure >= 0) return best_pure;
  if (best_open >= 0) return best_open;
  throw SimError("slap_assign: warehouse full, no open location for SKU " + std::to_string(sku));
}

int ulsp_select(const WarehouseState& s, int sku) { return s.inventory.newest_accessible_lane(sku); }

int dispatch_nearest(const WarehouseState& s, Cell start) {
  const auto field = s.router->field_from_projected(start);
  int best = -1;
  double best_d = std::numeric_limits<double>::infinity();
  for (const auto& amr : s.fleet) {
    if (!amr.free()) continue;
    const double d = s.router->distance_via_field(*field, amr.position);
    if (d < best_d) {
      best_d = d;
      best = amr.id;
    }
  }
  return best;
}

int select_station(const WarehouseState& s, Cell from) {
  if (s.stations.empty()) throw SimError("select_station: no stations");
  int best = -1;
  bool best_free = false;
  int best_queue = 0;
  double best_d = 0.0;
  for (const auto& st : s.stations) {
    const double d = s.router->distance_m(from, st.position);
    const int q = static_cast<int>(st.queue.size());
    bool better;
    if (best < 0) {
      better = true;
    } else if (st.free() != best_free) {
      better = st.free();
    } else if (st.free()) {
      better = d < best_d;
    } else {
      better = q < best_queue || (q == best_queue && d < best_d);
    }
    if (better) {
      best = st.id;
      best_free = st.free();
      best_queue = q;
      best_d = d;
    }
  }
  return best;
}

}  // namespace bsc
