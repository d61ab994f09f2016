#include "bsc/orders/stream.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "bsc/util/errors.hpp"

namespace bsc {

namespace {
constexpr double kWeekSeconds = 7.0 * 86400.0;
}

OrderStream OrderStream::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open order file: " + path);
  OrderStream s;
  std::string line;
  int lineno = 0;
  if (!std::getline(in, line)) throw ConfigError(path + ": empty file, expected header");
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "arrival_s,kind,sku,dock")
    throw ConfigError(path + " line 1: expected header 'arrival_s,kind,sku,dock'");
  double prev = 0.0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string f_time, f_kind, f_sku, f_dock;
    if (!std::getline(ls, f_time, ',') || !std::getline(ls, f_kind, ',') ||
        !std::getline(ls, f_sku, ',') || !std::getline(ls, f_dock))
      throw ConfigError(path + " line " + std::to_string(lineno) + ": expected 4 fields");
    Entry e;
    char* end = nullptr;
    e.arrival_s = std::strtod(f_time.c_str(), &end);
    if (end == f_time.c_str() || *end != '\0' || !std::isfinite(e.arrival_s))
      throw ConfigError(path + " line " + std::to_string(lineno) + ": bad arrival time '" + f_time + "'");
    if (e.arrival_s < 0)
      throw ConfigError(path + " line " + std::to_string(lineno) + ": negative arrival time");
    if (e.arrival_s < prev)
      throw ConfigError(path + " line " + std::to_string(lineno) + ": arrival times must be non-decreasing");
    prev = e.arrival_s;
    if (f_kind == "D") e.kind = OrderKind::Delivery;
    else if (f_kind == "R") e.kind = OrderKind::Retrieval;
    else throw ConfigError(path + " line " + std::to_string(lineno) + ": kind must be D or R");
    e.sku = static_cast<int>(std::strtol(f_sku.c_str(), &end, 10));
    if (end == f_sku.c_str() || *end != '\0' || e.sku < 0)
      throw ConfigError(path + " line " + std::to_string(lineno) + ": bad sku '" + f_sku + "'");
    e.dock = static_cast<int>(std::strtol(f_dock.c_str(), &end, 10));
    if (end == f_dock.c_str() || *end != '\0' || e.dock < 0)
      throw ConfigError(path + " line " + std::to_string(lineno) + ": bad dock '" + f_dock + "'");
    s.entries.push_back(e);
  }
  return s;
}

void OrderStream::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write order file: " + path);
  out << "arrival_s,kind,sku,dock\n";
  char buf[96];
  for (const auto& e : entries) {
    std::snprintf(buf, sizeof(buf), "%.17g,%c,%d,%d\n", e.arrival_s,
                  e.kind == OrderKind::Delivery ? 'D' : 'R', e.sku, e.dock);
    out << buf;
  }
}

std::vector<OrderStream> OrderStream::split_weeks() const {
  std::vector<OrderStream> weeks;
  for (const auto& e : entries) {
    const int w = static_cast<int>(e.arrival_s / kWeekSeconds);
    while (static_cast<int>(weeks.size()) <= w) {
      OrderStream s;
      s.seed = seed;
      s.generator = generator;
      weeks.push_back(std::move(s));
    }
    Entry rebased = e;
    rebased.arrival_s = e.arrival_s - w * kWeekSeconds;
    weeks[w].entries.push_back(rebased);
  }
  return weeks;
}

}  // namespace bsc
