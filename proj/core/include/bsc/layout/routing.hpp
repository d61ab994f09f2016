#pragma once

#include <memory>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "bsc/layout/layout.hpp"

namespace bsc {

struct RouteResult {
  double distance_m = 0.0;
  double travel_time_s = 0.0;
  std::vector<Cell> path;  // filled only when requested
};

/// Shortest-path queries over the aisle/corridor grid (4-connected, unit
/// cost), with per-source distance fields memoized. Storage endpoints are
/// projected onto their lane's access aisle cell plus the in-lane offset.
///
/// Thread-safe for concurrent queries; the cache is shared under a rw-lock.
class Router {
 public:
  explicit Router(const WarehouseLayout& layout) : layout_(layout) {}

  double distance_m(Cell from, Cell to) const;
  double travel_time_s(Cell from, Cell to) const {
    return distance_m(from, to) / layout_.amr_speed_mps();
  }
  RouteResult route(Cell from, Cell to, bool with_path = false) const;

  /// BFS distance field (in cells) from a traversable source; -1 unreachable.
  std::shared_ptr<const std::vector<std::int32_t>> field_from(Cell source) const;

  /// Field from an arbitrary cell, projected onto its traversable anchor.
  /// The source-side lane offset is excluded (it is a constant and cancels
  /// in nearest-of-many comparisons).
  std::shared_ptr<const std::vector<std::int32_t>> field_from_projected(Cell source) const {
    return field_from(project(source).anchor);
  }

  /// Distance in metres from `from` to every traversable cell anchor; used by
  /// nearest-of-many scans (dispatching, station selection).
  double distance_via_field(const std::vector<std::int32_t>& field, Cell from) const;

  const WarehouseLayout& layout() const { return layout_; }

 private:
  struct Endpoint {
    Cell anchor = kNoCell;  // traversable cell to route to/from
    int offset_cells = 0;   // extra in-lane cells
  };
  Endpoint project(Cell c) const;

  const WarehouseLayout& layout_;
  mutable std::unordered_map<Cell, std::shared_ptr<const std::vector<std::int32_t>>> cache_;
  mutable std::shared_mutex mu_;
};

}  // namespace bsc
