#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "bsc/layout/layout.hpp"

namespace bsc {

/// A stored pallet. `uid` increases with every placement and breaks
/// arrival-time ties in the LIFO retrieval rule.
struct Pallet {
  int sku = 0;
  double arrival_s = 0.0;
  std::uint64_t uid = 0;
};

/// Lane-resident stock. Each lane is a stack whose top is the aisle-facing
/// pallet. Stock leaves the books when a retrieval is dispatched (the pallet
/// is committed to that order) and enters them when a delivered pallet is
/// released in its lane; slot reservations made at storage-assignment time
/// keep two inbound pallets from claiming one slot.
class Inventory {
 public:
  explicit Inventory(const WarehouseLayout& layout);

  /// Pallets of `sku` whose lane top they are (i.e. retrievable right now).
  int accessible_count(int sku) const;
  /// Total pallets of `sku` on the books.
  int stock(int sku) const;

  /// Newest accessible pallet of `sku`: max (arrival_s, uid) among lane tops,
  /// distance ties broken upstream. Returns the lane id. Throws if out of stock.
  int newest_accessible_lane(int sku) const;

  const std::vector<Pallet>& lane_stack(int lane) const { return stacks_[lane]; }
  int lane_size(int lane) const { return static_cast<int>(stacks_[lane].size()); }
  int lane_free_slots(int lane) const;
  bool lane_pure_for(int lane, int sku) const;

  void reserve_slot(int lane);
  /// Consumes one reservation and stores the pallet.
  void push(int lane, const Pallet& p);
  /// Pops the aisle-end pallet (the stack top).
  Pallet pop(int lane);

  /// Next inbound slot index (from the lane back), reservations included.
  int next_slot(int lane) const { return static_cast<int>(stacks_[lane].size()) + reserved_in_[lane]; }
  /// Slot index of the current top pallet.
  int top_slot(int lane) const { return static_cast<int>(stacks_[lane].size()) - 1; }

  int occupied_locations() const { return occupied_; }  // assigned slots
  int total_locations() const { return total_; }
  double fill_level() const;  // 1 - occupied/total

  /// Mean over lanes of the Shannon entropy (nats) of each lane's SKU mix.
  double mean_lane_entropy() const;

  std::uint64_t next_uid() { return uid_counter_++; }

 private:
  void entropy_remove(int lane);
  void entropy_add(int lane);

  const WarehouseLayout& layout_;
  std::vector<std::vector<Pallet>> stacks_;
  std::vector<int> reserved_in_;
  std::vector<std::map<int, int>> sku_mix_;     // per lane: sku -> count
  std::vector<double> lane_entropy_;
  double entropy_sum_ = 0.0;
  std::vector<std::set<int>> top_lanes_;        // per sku: lanes whose top is sku
  std::vector<int> stock_;                      // per sku (grown on demand)
  int occupied_ = 0;
  int total_ = 0;
  std::uint64_t uid_counter_ = 0;
};

}  // namespace bsc
