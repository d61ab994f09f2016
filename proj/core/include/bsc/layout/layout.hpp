#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bsc {

/// Grid cell index (y * width + x). -1 means "no cell".
using Cell = std::int32_t;
inline constexpr Cell kNoCell = -1;

enum class CellKind : std::uint8_t { Storage, Aisle, InputDock, OutputDock, Station };

/// A storage lane: a vertical run of storage cells in one column, filled from
/// the back and accessed LIFO from the aisle end (the south end here).
struct Lane {
  int id = -1;
  int x = 0;
  int y_top = 0;   // back of the lane (farthest from the access aisle)
  int depth = 0;   // number of storage cells
  Cell access_aisle = kNoCell;  // traversable cell directly south of the lane
};

struct PresetConfig {
  int width_cells = 150;
  int depth_cells = 80;
  double cell_m = 1.0;
  int input_docks = 4;    // west wall
  int output_docks = 10;  // south wall
  int stations = 3;       // north wall, equidistant
  int lane_depth = 8;
  int corridor_every = 10;  // vertical corridor column spacing
  double amr_speed_mps = 1.5;
  double handling_s = 10.0;
};

/// Immutable warehouse geometry: cell grid, lanes, docks, charging stations.
class WarehouseLayout {
 public:
  static WarehouseLayout build_preset(const PresetConfig& cfg);

  /// Plain-text grid file: a `key value` header, then a `grid` line followed
  /// by one row per line (S storage, . aisle, I input dock, O output dock,
  /// C charging station).
  static WarehouseLayout load_grid(const std::string& path);
  void save_grid(const std::string& path) const;

  int width() const { return width_; }
  int depth() const { return depth_; }
  double cell_m() const { return cell_m_; }
  double amr_speed_mps() const { return speed_; }
  double handling_s() const { return handling_s_; }

  Cell cell(int x, int y) const { return static_cast<Cell>(y) * width_ + x; }
  int x_of(Cell c) const { return static_cast<int>(c % width_); }
  int y_of(Cell c) const { return static_cast<int>(c / width_); }
  bool in_bounds(Cell c) const { return c >= 0 && c < static_cast<Cell>(kinds_.size()); }

  CellKind kind(Cell c) const { return kinds_[c]; }
  bool traversable(Cell c) const { return kinds_[c] != CellKind::Storage; }

  const std::vector<Lane>& lanes() const { return lanes_; }
  const Lane& lane(int id) const { return lanes_[id]; }
  /// Lane covering a storage cell, or nullptr.
  const Lane* lane_at(Cell c) const;

  const std::vector<Cell>& input_docks() const { return input_docks_; }
  const std::vector<Cell>& output_docks() const { return output_docks_; }
  const std::vector<Cell>& stations() const { return stations_; }

  /// Storage cell of a lane slot; slot 0 is the back of the lane.
  Cell slot_cell(const Lane& lane, int slot) const { return cell(lane.x, lane.y_top + slot); }
  /// Walking distance (in cells) between a slot and the lane's access aisle cell.
  int slot_offset_cells(const Lane& lane, int slot) const { return lane.depth - slot; }

  int storage_capacity() const;

  /// Conservative bound on shortest-path lengths, used to scale travel features.
  double diameter_m() const { return 2.0 * (width_ + depth_) * cell_m_; }

 private:
  void index_lanes_and_validate();

  int width_ = 0;
  int depth_ = 0;
  double cell_m_ = 1.0;
  double speed_ = 1.5;
  double handling_s_ = 10.0;
  std::vector<CellKind> kinds_;
  std::vector<Lane> lanes_;
  std::vector<int> cell_to_lane_;  // -1 for non-storage
  std::vector<Cell> input_docks_, output_docks_, stations_;
};

}  // namespace bsc
