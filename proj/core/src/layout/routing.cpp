#include "bsc/layout/routing.hpp"

#include <algorithm>
#include <deque>

#include "bsc/util/errors.hpp"

namespace bsc {

Router::Endpoint Router::project(Cell c) const {
  if (!layout_.in_bounds(c)) throw SimError("route endpoint out of bounds");
  if (layout_.traversable(c)) return {c, 0};
  const Lane* lane = layout_.lane_at(c);
  if (lane == nullptr) throw SimError("route endpoint is a non-lane storage cell");
  const int slot = layout_.y_of(c) - lane->y_top;
  return {lane->access_aisle, layout_.slot_offset_cells(*lane, slot)};
}

std::shared_ptr<const std::vector<std::int32_t>> Router::field_from(Cell source) const {
  {
    std::shared_lock lock(mu_);
    const auto it = cache_.find(source);
    if (it != cache_.end()) return it->second;
  }
  auto field = std::make_shared<std::vector<std::int32_t>>(
      static_cast<size_t>(layout_.width()) * layout_.depth(), -1);
  auto& d = *field;
  std::deque<Cell> frontier;
  d[source] = 0;
  frontier.push_back(source);
  const int w = layout_.width(), h = layout_.depth();
  while (!frontier.empty()) {
    const Cell c = frontier.front();
    frontier.pop_front();
    const int cx = layout_.x_of(c), cy = layout_.y_of(c);
    const int dx[4] = {0, 1, 0, -1};
    const int dy[4] = {-1, 0, 1, 0};
    for (int k = 0; k < 4; ++k) {
      const int nx = cx + dx[k], ny = cy + dy[k];
      if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
      const Cell n = layout_.cell(nx, ny);
      if (d[n] >= 0 || !layout_.traversable(n)) continue;
      d[n] = d[c] + 1;
      frontier.push_back(n);
    }
  }
  std::unique_lock lock(mu_);
  const auto [it, inserted] = cache_.emplace(source, std::move(field));
  return it->second;
}

double Router::distance_via_field(const std::vector<std::int32_t>& field, Cell from) const {
  const Endpoint e = project(from);
  const std::int32_t d = field[e.anchor];
  if (d < 0) throw SimError("unreachable route target");
  return (d + e.offset_cells) * layout_.cell_m();
}

double Router::distance_m(Cell from, Cell to) const {
  if (from == to) return 0.0;
  const Endpoint a = project(from);
  const Endpoint b = project(to);
  if (a.anchor == b.anchor) {
    // Same lane (or one endpoint is the other's access cell): walk the lane.
    return std::abs(a.offset_cells - b.offset_cells) * layout_.cell_m();
  }
  const auto field = field_from(a.anchor);
  const std::int32_t d = (*field)[b.anchor];
  if (d < 0)
    throw SimError("unreachable route from (" + std::to_string(layout_.x_of(from)) + "," +
                   std::to_string(layout_.y_of(from)) + ") to (" + std::to_string(layout_.x_of(to)) +
                   "," + std::to_string(layout_.y_of(to)) + ")");
  return (d + a.offset_cells + b.offset_cells) * layout_.cell_m();
}

RouteResult Router::route(Cell from, Cell to, bool with_path) const {
  RouteResult r;
  r.distance_m = distance_m(from, to);
  r.travel_time_s = r.distance_m / layout_.amr_speed_mps();
  if (!with_path || from == to) {
    if (with_path) r.path.push_back(from);
    return r;
  }
  const Endpoint a = project(from);
  const Endpoint b = project(to);

  // Reconstruct the corridor part by walking downhill on the distance field
  // from the target side; lane offsets are prepended/appended as cell runs.
  std::vector<Cell> corridor;
  if (a.anchor != b.anchor) {
    const auto field = field_from(a.anchor);
    Cell cur = b.anchor;
    corridor.push_back(cur);
    while (cur != a.anchor) {
      const int cx = layout_.x_of(cur), cy = layout_.y_of(cur);
      const int dx[4] = {0, 1, 0, -1};
      const int dy[4] = {-1, 0, 1, 0};
      Cell next = kNoCell;
      for (int k = 0; k < 4; ++k) {
        const int nx = cx + dx[k], ny = cy + dy[k];
        if (nx < 0 || nx >= layout_.width() || ny < 0 || ny >= layout_.depth()) continue;
        const Cell n = layout_.cell(nx, ny);
        if (!layout_.traversable(n)) continue;
        if ((*field)[n] == (*field)[cur] - 1) {
          next = n;
          break;
        }
      }
      cur = next;
      corridor.push_back(cur);
    }
    std::reverse(corridor.begin(), corridor.end());
  } else {
    corridor.push_back(a.anchor);
  }

  if (!layout_.traversable(from)) {
    const Lane* lane = layout_.lane_at(from);
    const int slot = layout_.y_of(from) - lane->y_top;
    for (int s = slot; s < lane->depth; ++s) r.path.push_back(layout_.slot_cell(*lane, s));
  }
  r.path.insert(r.path.end(), corridor.begin(), corridor.end());
  if (!layout_.traversable(to)) {
    const Lane* lane = layout_.lane_at(to);
    const int slot = layout_.y_of(to) - lane->y_top;
    for (int s = lane->depth - 1; s >= slot; --s) r.path.push_back(layout_.slot_cell(*lane, s));
  }
  return r;
}

}  // namespace bsc
