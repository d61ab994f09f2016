#include "bsc/warehouse/inventory.hpp"

#include <cmath>

#include "bsc/util/errors.hpp"

namespace bsc {

Inventory::Inventory(const WarehouseLayout& layout) : layout_(layout) {
  const int n = static_cast<int>(layout.lanes().size());
  stacks_.resize(n);
  reserved_in_.assign(n, 0);
  sku_mix_.resize(n);
  lane_entropy_.assign(n, 0.0);
  total_ = layout.storage_capacity();
}

int Inventory::lane_free_slots(int lane) const {
  return layout_.lane(lane).depth - static_cast<int>(stacks_[lane].size()) - reserved_in_[lane];
}

bool Inventory::lane_pure_for(int lane, int sku) const {
  const auto& mix = sku_mix_[lane];
  return mix.size() == 1 && mix.begin()->first == sku;
}

int Inventory::stock(int sku) const {
  return sku < static_cast<int>(stock_.size()) ? stock_[sku] : 0;
}

int Inventory::accessible_count(int sku) const {
  if (sku >= static_cast<int>(top_lanes_.size())) return 0;
  return static_cast<int>(top_lanes_[sku].size());
}

int Inventory::newest_accessible_lane(int sku) const {
  if (accessible_count(sku) == 0)
    throw SimError("inventory: SKU " + std::to_string(sku) + " has no accessible pallet");
  int best_lane = -1;
  double best_t = -1.0;
  std::uint64_t best_uid = 0;
  for (int lane : top_lanes_[sku]) {  // std::set iterates in ascending lane id
    const Pallet& top = stacks_[lane].back();
    if (best_lane < 0 || top.arrival_s > best_t || (top.arrival_s == best_t && top.uid > best_uid)) {
      best_lane = lane;
      best_t = top.arrival_s;
      best_uid = top.uid;
    }
  }
  return best_lane;
}

void Inventory::reserve_slot(int lane) {
  if (lane_free_slots(lane) <= 0)
    throw SimError("inventory: reserving slot in full lane " + std::to_string(lane));
  ++reserved_in_[lane];
  ++occupied_;
}

void Inventory::entropy_remove(int lane) {
  entropy_sum_ -= lane_entropy_[lane];
  lane_entropy_[lane] = 0.0;
}

void Inventory::entropy_add(int lane) {
  const auto& mix = sku_mix_[lane];
  const double n = static_cast<double>(stacks_[lane].size());
  double h = 0.0;
  if (n > 0.0 && mix.size() > 1) {
    for (const auto& [sku, count] : mix) {
      const double p = count / n;
      h -= p * std::log(p);
    }
  }
  lane_entropy_[lane] = h;
  entropy_sum_ += h;
}

void Inventory::push(int lane, const Pallet& p) {
  if (reserved_in_[lane] <= 0)
    throw SimError("inventory: push without reservation in lane " + std::to_string(lane));
  entropy_remove(lane);
  // Previous top loses accessibility for its sku.
  if (!stacks_[lane].empty()) {
    const int old_sku = stacks_[lane].back().sku;
    if (old_sku != p.sku) top_lanes_[old_sku].erase(lane);
  }
  --reserved_in_[lane];
  stacks_[lane].push_back(p);
  ++sku_mix_[lane][p.sku];
  if (p.sku >= static_cast<int>(stock_.size())) {
    stock_.resize(p.sku + 1, 0);
    top_lanes_.resize(p.sku + 1);
  }
  ++stock_[p.sku];
  top_lanes_[p.sku].insert(lane);
  entropy_add(lane);
}

Pallet Inventory::pop(int lane) {
  if (stacks_[lane].empty())
    throw SimError("inventory: pop from empty lane " + std::to_string(lane));
  entropy_remove(lane);
  const Pallet p = stacks_[lane].back();
  stacks_[lane].pop_back();
  auto it = sku_mix_[lane].find(p.sku);
  if (--it->second == 0) sku_mix_[lane].erase(it);
  --stock_[p.sku];
  top_lanes_[p.sku].erase(lane);
  if (!stacks_[lane].empty()) top_lanes_[stacks_[lane].back().sku].insert(lane);
  --occupied_;
  entropy_add(lane);
  return p;
}

double Inventory::fill_level() const {
  if (total_ == 0) return 0.0;
  return 1.0 - static_cast<double>(occupied_) / total_;
}

double Inventory::mean_lane_entropy() const {
  if (stacks_.empty()) return 0.0;
  const double h = entropy_sum_ / static_cast<double>(stacks_.size());
  return h < 0.0 ? 0.0 : h;  // guard accumulated rounding
}

}  // namespace bsc
