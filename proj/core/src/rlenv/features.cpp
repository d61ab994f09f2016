#include "bsc/rlenv/features.hpp"

#include <algorithm>
#include <cmath>

namespace bsc {

namespace {
double clip01(double x) { return std::clamp(x, 0.0, 1.0); }
}  // namespace

void FeatureCaps::fill_defaults(const WarehouseLayout& layout, int sku_count_hint) {
  if (dist_cap_m <= 0.0) dist_cap_m = layout.diameter_m();
  if (time_cap_s <= 0.0) time_cap_s = layout.diameter_m() / layout.amr_speed_mps();
  if (sku_count <= 0) sku_count = sku_count_hint;
}

int observation_size(int num_amrs, int num_stations) {
  return 18 + num_amrs + 2 * num_stations;
}

Observation observe(const WarehouseState& s, double now, const FeatureCaps& caps) {
  const int nv = static_cast<int>(s.fleet.size());
  const int nc = static_cast<int>(s.stations.size());
  const double b_cap = s.battery.capacity_ah;
  Observation obs;
  obs.reserve(observation_size(nv, nc));

  double total = 0.0, busy_total = 0.0;
  int busy = 0, free = 0, depleted = 0;
  std::vector<double> live(nv);
  for (int i = 0; i < nv; ++i) {
    const AMR& a = s.fleet[i];
    live[i] = s.live_battery_ah(a, now);
    total += live[i];
    switch (a.status) {
      case AmrStatus::Free: ++free; break;
      case AmrStatus::Depleted: ++depleted; break;
      case AmrStatus::Busy:
        ++busy;
        busy_total += live[i];
        break;
      default: break;
    }
  }

  obs.push_back(clip01(total / (nv * b_cap)));
  obs.push_back(busy > 0 ? clip01(busy_total / (busy * b_cap)) : 0.0);
  for (const auto& st : s.stations)
    obs.push_back(st.occupant >= 0 ? clip01(live[st.occupant] / b_cap) : 0.0);
  for (int i = 0; i < nv; ++i) obs.push_back(clip01(live[i] / b_cap));
  obs.push_back(static_cast<double>(depleted) / nv);
  obs.push_back(static_cast<double>(free) / nv);
  obs.push_back(static_cast<double>(busy) / nv);
  obs.push_back(static_cast<double>(busy) / nv);  // utilization
  obs.push_back(clip01(s.inventory.fill_level()));
  for (const auto& st : s.stations)
    obs.push_back(clip01(static_cast<double>(st.queue.size()) / nv));
  obs.push_back(clip01(static_cast<double>(s.queues.retrieval_len()) / s.queues.cap_retrieval));
  obs.push_back(clip01(static_cast<double>(s.queues.delivery_len()) / s.queues.cap_delivery));

  const int hour = static_cast<int>(std::fmod(now / 3600.0, 24.0));
  const double angle = 2.0 * M_PI * hour / 24.0;
  obs.push_back((std::sin(angle) + 1.0) / 2.0);
  obs.push_back((std::cos(angle) + 1.0) / 2.0);
  const int day = static_cast<int>(std::fmod(now / 86400.0, 7.0)) + 1;
  obs.push_back(day / 7.0);

  obs.push_back(static_cast<double>(s.free_station_count()) / nc);

  const double max_entropy = caps.sku_count > 1 ? std::log(static_cast<double>(caps.sku_count)) : 1.0;
  obs.push_back(clip01(s.inventory.mean_lane_entropy() / max_entropy));

  const auto& m = s.metrics;
  const double rt = m.retrieval_completed > 0 ? m.retrieval_time_sum / m.retrieval_completed : 0.0;
  const double dt = m.delivery_completed > 0 ? m.delivery_time_sum / m.delivery_completed : 0.0;
  const double rd = m.retrieval_completed > 0 ? m.retrieval_dist_sum / m.retrieval_completed : 0.0;
  const double dd = m.delivery_completed > 0 ? m.delivery_dist_sum / m.delivery_completed : 0.0;
  obs.push_back(clip01(rt / caps.time_cap_s));
  obs.push_back(clip01(dt / caps.time_cap_s));
  obs.push_back(clip01(rd / caps.dist_cap_m));
  obs.push_back(clip01(dd / caps.dist_cap_m));
  return obs;
}

}  // namespace bsc
