#include "bsc/layout/layout.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <sstream>

#include "bsc/util/errors.hpp"

namespace bsc {
namespace {

char kind_char(CellKind k) {
  switch (k) {
    case CellKind::Storage: return 'S';
    case CellKind::Aisle: return '.';
    case CellKind::InputDock: return 'I';
    case CellKind::OutputDock: return 'O';
    case CellKind::Station: return 'C';
  }
  return '?';
}

CellKind kind_from_char(char c, int lineno) {
  switch (c) {
    case 'S': return CellKind::Storage;
    case '.': return CellKind::Aisle;
    case 'I': return CellKind::InputDock;
    case 'O': return CellKind::OutputDock;
    case 'C': return CellKind::Station;
    default:
      throw ConfigError("grid line " + std::to_string(lineno) + ": unknown cell '" + std::string(1, c) + "'");
  }
}

/// Equidistant positions: k slots over extent n, at round((i+1) * n / (k+1)).
std::vector<int> spread(int k, int n) {
  std::vector<int> out;
  out.reserve(k);
  for (int i = 0; i < k; ++i) {
    int p = static_cast<int>(std::lround(static_cast<double>(i + 1) * n / (k + 1)));
    p = std::clamp(p, 0, n - 1);
    out.push_back(p);
  }
  return out;
}

}  // namespace

WarehouseLayout WarehouseLayout::build_preset(const PresetConfig& cfg) {
  if (cfg.width_cells < 5 || cfg.depth_cells < 5)
    throw ConfigError("layout preset: grid must be at least 5x5 cells");
  if (cfg.input_docks < 1 || cfg.output_docks < 1 || cfg.stations < 1)
    throw ConfigError("layout preset: need at least one input dock, output dock and station");
  if (cfg.lane_depth < 1) throw ConfigError("layout preset: lane_depth must be >= 1");

  WarehouseLayout l;
  l.width_ = cfg.width_cells;
  l.depth_ = cfg.depth_cells;
  l.cell_m_ = cfg.cell_m;
  l.speed_ = cfg.amr_speed_mps;
  l.handling_s_ = cfg.handling_s;
  l.kinds_.assign(static_cast<size_t>(l.width_) * l.depth_, CellKind::Aisle);

  const int w = l.width_, h = l.depth_;

  // Interior storage bands of lane_depth rows separated by single aisle rows,
  // with full-height corridor columns every corridor_every columns.
  auto is_corridor_col = [&](int x) {
    if (x <= 0 || x >= w - 1) return true;  // border ring stays traversable
    return cfg.corridor_every > 0 && x % cfg.corridor_every == 0;
  };
  int y = 1;
  while (y + 1 < h) {
    const int band_depth = std::min(cfg.lane_depth, h - 1 - y);
    if (band_depth < 1) break;
    for (int x = 1; x < w - 1; ++x) {
      if (is_corridor_col(x)) continue;
      for (int dy = 0; dy < band_depth; ++dy)
        l.kinds_[l.cell(x, y + dy)] = CellKind::Storage;
    }
    y += band_depth + 1;  // skip the separating aisle row
  }

  // Stations on the north wall, input docks on the west wall, output docks on
  // the south wall.
  for (int x : spread(cfg.stations, w)) l.kinds_[l.cell(x, 0)] = CellKind::Station;
  for (int yy : spread(cfg.input_docks, h)) l.kinds_[l.cell(0, yy)] = CellKind::InputDock;
  for (int x : spread(cfg.output_docks, w)) l.kinds_[l.cell(x, h - 1)] = CellKind::OutputDock;

  l.index_lanes_and_validate();
  return l;
}

WarehouseLayout WarehouseLayout::load_grid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open layout file: " + path);

  WarehouseLayout l;
  std::string line;
  int lineno = 0;
  bool in_grid = false;
  std::vector<std::string> rows;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!in_grid) {
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ls(line);
      std::string key;
      ls >> key;
      if (key == "grid") {
        in_grid = true;
        continue;
      }
      double value = 0;
      if (!(ls >> value))
        throw ConfigError(path + " line " + std::to_string(lineno) + ": header expects 'key value'");
      if (key == "cell_m") l.cell_m_ = value;
      else if (key == "speed_mps") l.speed_ = value;
      else if (key == "handling_s") l.handling_s_ = value;
      else throw ConfigError(path + " line " + std::to_string(lineno) + ": unknown header key '" + key + "'");
    } else {
      if (line.empty()) continue;
      rows.push_back(line);
    }
  }
  if (rows.empty()) throw ConfigError(path + ": no grid rows");
  l.depth_ = static_cast<int>(rows.size());
  l.width_ = static_cast<int>(rows[0].size());
  l.kinds_.assign(static_cast<size_t>(l.width_) * l.depth_, CellKind::Aisle);
  for (int yy = 0; yy < l.depth_; ++yy) {
    if (static_cast<int>(rows[yy].size()) != l.width_)
      throw ConfigError(path + ": grid row " + std::to_string(yy + 1) + " has ragged width");
    for (int x = 0; x < l.width_; ++x)
      l.kinds_[l.cell(x, yy)] = kind_from_char(rows[yy][x], yy + 1);
  }
  l.index_lanes_and_validate();
  return l;
}

void WarehouseLayout::save_grid(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write layout file: " + path);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "cell_m %.17g\nspeed_mps %.17g\nhandling_s %.17g\n", cell_m_, speed_, handling_s_);
  out << buf << "grid\n";
  for (int y = 0; y < depth_; ++y) {
    for (int x = 0; x < width_; ++x) out << kind_char(kinds_[cell(x, y)]);
    out << '\n';
  }
}

const Lane* WarehouseLayout::lane_at(Cell c) const {
  if (!in_bounds(c)) return nullptr;
  const int id = cell_to_lane_[c];
  return id < 0 ? nullptr : &lanes_[id];
}

int WarehouseLayout::storage_capacity() const {
  int n = 0;
  for (const auto& lane : lanes_) n += lane.depth;
  return n;
}

void WarehouseLayout::index_lanes_and_validate() {
  input_docks_.clear();
  output_docks_.clear();
  stations_.clear();
  for (Cell c = 0; c < static_cast<Cell>(kinds_.size()); ++c) {
    switch (kinds_[c]) {
      case CellKind::InputDock: input_docks_.push_back(c); break;
      case CellKind::OutputDock: output_docks_.push_back(c); break;
      case CellKind::Station: stations_.push_back(c); break;
      default: break;
    }
  }
  if (input_docks_.empty()) throw ConfigError("layout: no input dock");
  if (output_docks_.empty()) throw ConfigError("layout: no output dock");
  if (stations_.empty()) throw ConfigError("layout: no charging station");

  // Lanes are maximal vertical storage runs; the access end is the south end.
  cell_to_lane_.assign(kinds_.size(), -1);
  lanes_.clear();
  for (int x = 0; x < width_; ++x) {
    int y = 0;
    while (y < depth_) {
      if (kinds_[cell(x, y)] != CellKind::Storage) {
        ++y;
        continue;
      }
      const int y_top = y;
      while (y < depth_ && kinds_[cell(x, y)] == CellKind::Storage) ++y;
      Lane lane;
      lane.id = static_cast<int>(lanes_.size());
      lane.x = x;
      lane.y_top = y_top;
      lane.depth = y - y_top;
      if (y >= depth_)
        throw ConfigError("layout: lane at column " + std::to_string(x) + " touches the south edge; no access aisle");
      lane.access_aisle = cell(x, y);
      for (int yy = y_top; yy < y; ++yy) cell_to_lane_[cell(x, yy)] = lane.id;
      lanes_.push_back(lane);
    }
  }
  if (lanes_.empty()) throw ConfigError("layout: no storage lanes");

  // Connectivity: every dock, station and lane access cell must be mutually
  // reachable over traversable cells.
  std::vector<char> seen(kinds_.size(), 0);
  std::deque<Cell> frontier;
  frontier.push_back(input_docks_[0]);
  seen[input_docks_[0]] = 1;
  while (!frontier.empty()) {
    const Cell c = frontier.front();
    frontier.pop_front();
    const int cx = x_of(c), cy = y_of(c);
    const int dx[4] = {0, 1, 0, -1};
    const int dy[4] = {-1, 0, 1, 0};
    for (int k = 0; k < 4; ++k) {
      const int nx = cx + dx[k], ny = cy + dy[k];
      if (nx < 0 || nx >= width_ || ny < 0 || ny >= depth_) continue;
      const Cell n = cell(nx, ny);
      if (seen[n] || !traversable(n)) continue;
      seen[n] = 1;
      frontier.push_back(n);
    }
  }
  auto check = [&](Cell c, const char* what) {
    if (!seen[c])
      throw ConfigError(std::string("layout: disconnected ") + what + " at (" +
                        std::to_string(x_of(c)) + "," + std::to_string(y_of(c)) + ")");
  };
  for (Cell c : input_docks_) check(c, "input dock");
  for (Cell c : output_docks_) check(c, "output dock");
  for (Cell c : stations_) check(c, "charging station");
  for (const auto& lane : lanes_) check(lane.access_aisle, "lane access cell");
}

}  // namespace bsc
