#pragma once

#include "bsc/warehouse/state.hpp"

namespace bsc {

/// Storage location assignment ("closest open pure lane"): nearest lane (by
/// route distance from `from_dock`) that holds only `sku` and has space;
/// otherwise the nearest lane with any free slot. Distance ties break on the
/// lower lane id. Throws when the warehouse is full.
int slap_assign(const WarehouseState& s, int sku, Cell from_dock);

/// Unit-load selection (LIFO): the accessible pallet of `sku` that arrived
/// last. Returns the lane whose top holds it. Throws when out of stock.
int ulsp_select(const WarehouseState& s, int sku);

/// Nearest free AMR to `start`; -1 when none is free. Ties break on the
/// lower AMR id.
int dispatch_nearest(const WarehouseState& s, Cell start);

/// Station choice for a charging trip: nearest unoccupied station; if all are
/// occupied, the shortest queue. Ties break on distance, then station id.
int select_station(const WarehouseState& s, Cell from);

}  // namespace bsc
