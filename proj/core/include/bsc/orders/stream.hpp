#pragma once

#include <string>
#include <vector>

#include "bsc/warehouse/order.hpp"

namespace bsc {

/// A time-ordered stream of order arrivals. Dock indices refer to the kind's
/// dock list (input docks for deliveries, output docks for retrievals).
struct OrderStream {
  struct Entry {
    double arrival_s = 0.0;
    OrderKind kind = OrderKind::Delivery;
    int sku = 0;
    int dock = 0;
  };

  std::vector<Entry> entries;
  std::uint64_t seed = 0;        // generator seed, 0 when loaded from file
  std::string generator = "";    // provenance note

  int size() const { return static_cast<int>(entries.size()); }
  bool empty() const { return entries.empty(); }

  /// CSV with header `arrival_s,kind,sku,dock`; kind is D or R. Doubles are
  /// written with round-trip precision so save/load is an identity.
  static OrderStream load(const std::string& path);
  void save(const std::string& path) const;

  /// Splits into 7-day episodes, arrival times rebased to each week's start.
  /// The split partitions the stream: no entry is lost or duplicated.
  std::vector<OrderStream> split_weeks() const;
};

}  // namespace bsc
