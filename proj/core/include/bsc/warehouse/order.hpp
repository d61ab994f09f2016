#pragma once

#include <cstdint>

namespace bsc {

enum class OrderKind : std::uint8_t { Delivery, Retrieval };

enum class OrderState : std::uint8_t { Queued, InService, Completed, Stranded };

/// One in- or outbound order. `dock` indexes the kind's dock list
/// (input docks for deliveries, output docks for retrievals).
struct Order {
  int id = -1;
  OrderKind kind = OrderKind::Delivery;
  int sku = 0;
  double arrival_s = 0.0;
  int dock = 0;
  OrderState state = OrderState::Queued;
  double completion_s = -1.0;
  int amr = -1;
  int lane = -1;  // storage lane serving this order, once chosen
  // Travel of the service trip (approach leg plus carrying leg).
  double trip_time_s = 0.0;
  double trip_dist_m = 0.0;
};

}  // namespace bsc
