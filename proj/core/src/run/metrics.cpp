#include "bsc/run/metrics.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

#include "bsc/util/errors.hpp"

namespace bsc {

using nlohmann::json;

EpisodeMetrics build_metrics(const Simulation& sim) {
  if (!sim.finished()) throw SimError("build_metrics: episode still running");
  const WarehouseState& s = sim.state();
  const MetricsAccum& m = s.metrics;
  EpisodeMetrics out;
  out.avg_service_time_s = m.avg_service_time();
  out.max_retrieval_queue = m.max_retrieval_queue;
  out.constraint_violations = static_cast<int>(s.queues.violations.size());
  out.orders_completed = m.completed;
  out.truncated_orders = sim.truncated_orders();
  out.stranded_amrs = m.stranded_amrs;
  out.charge_interrupts = m.charge_interrupts;
  out.decisions = m.decisions;
  out.makespan_s = sim.clock();
  const double duration = sim.clock();
  if (duration > 0.0) {
    out.mean_retrieval_queue = m.retrieval_queue_integral / duration;
    const double fleet = static_cast<double>(s.fleet.size());
    out.mean_battery_pct =
        m.battery_integral / duration / fleet / s.battery.capacity_ah * 100.0;
  } else {
    out.mean_retrieval_queue = s.queues.retrieval_len();
    out.mean_battery_pct = 100.0 * m.battery_sum_ah /
                           (s.battery.capacity_ah * static_cast<double>(s.fleet.size()));
  }
  double km = 0.0;
  for (const auto& a : s.fleet) km += a.odometer_m / 1000.0;
  out.mean_travel_km_per_amr = km / static_cast<double>(s.fleet.size());
  return out;
}

std::string EpisodeMetrics::to_json() const {
  json j;
  j["avg_service_time_s"] = avg_service_time_s;
  j["max_retrieval_queue"] = max_retrieval_queue;
  j["mean_retrieval_queue"] = mean_retrieval_queue;
  j["mean_battery_pct"] = mean_battery_pct;
  j["mean_travel_km_per_amr"] = mean_travel_km_per_amr;
  j["constraint_violations"] = constraint_violations;
  j["orders_completed"] = orders_completed;
  j["truncated_orders"] = truncated_orders;
  j["stranded_amrs"] = stranded_amrs;
  j["charge_interrupts"] = charge_interrupts;
  j["decisions"] = decisions;
  j["makespan_s"] = makespan_s;
  return j.dump(2) + "\n";
}

EpisodeMetrics EpisodeMetrics::from_json(const std::string& text) {
  const json j = json::parse(text);
  EpisodeMetrics m;
  m.avg_service_time_s = j.at("avg_service_time_s").get<double>();
  m.max_retrieval_queue = j.at("max_retrieval_queue").get<int>();
  m.mean_retrieval_queue = j.at("mean_retrieval_queue").get<double>();
  m.mean_battery_pct = j.at("mean_battery_pct").get<double>();
  m.mean_travel_km_per_amr = j.at("mean_travel_km_per_amr").get<double>();
  m.constraint_violations = j.at("constraint_violations").get<int>();
  m.orders_completed = j.at("orders_completed").get<int>();
  m.truncated_orders = j.at("truncated_orders").get<int>();
  m.stranded_amrs = j.value("stranded_amrs", 0);
  m.charge_interrupts = j.value("charge_interrupts", 0);
  m.decisions = j.value("decisions", 0);
  m.makespan_s = j.value("makespan_s", 0.0);
  return m;
}

std::string EpisodeMetrics::csv_header(const std::string& key_columns) {
  std::string h = key_columns;
  if (!h.empty()) h += ',';
  h +=
      "avg_service_time_s,max_retrieval_queue,mean_retrieval_queue,mean_battery_pct,"
      "mean_travel_km_per_amr,constraint_violations,orders_completed,truncated_orders,"
      "stranded_amrs,charge_interrupts\n";
  return h;
}

std::string EpisodeMetrics::csv_row(const std::string& key_values) const {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%.3f,%d,%.3f,%.3f,%.3f,%d,%d,%d,%d,%d\n", avg_service_time_s,
                max_retrieval_queue, mean_retrieval_queue, mean_battery_pct,
                mean_travel_km_per_amr, constraint_violations, orders_completed, truncated_orders,
                stranded_amrs, charge_interrupts);
  std::string row = key_values;
  if (!row.empty()) row += ',';
  row += buf;
  return row;
}

}  // namespace bsc
