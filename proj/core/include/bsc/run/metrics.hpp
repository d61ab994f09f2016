#pragma once

#include <string>

#include "bsc/engine/simulation.hpp"

namespace bsc {

/// Episode evaluation record; one row of every results table.
struct EpisodeMetrics {
  double avg_service_time_s = 0.0;
  int max_retrieval_queue = 0;
  double mean_retrieval_queue = 0.0;
  double mean_battery_pct = 0.0;
  double mean_travel_km_per_amr = 0.0;
  int constraint_violations = 0;
  int orders_completed = 0;
  int truncated_orders = 0;
  // Supplementary counters.
  int stranded_amrs = 0;
  int charge_interrupts = 0;
  int decisions = 0;
  double makespan_s = 0.0;

  std::string to_json() const;  // deterministic key order and formatting
  static EpisodeMetrics from_json(const std::string& text);

  static std::string csv_header(const std::string& key_columns);
  std::string csv_row(const std::string& key_values) const;

  bool operator==(const EpisodeMetrics&) const = default;
};

/// Collects the metrics of a finished episode.
EpisodeMetrics build_metrics(const Simulation& sim);

}  // namespace bsc
