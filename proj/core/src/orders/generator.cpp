#include "bsc/orders/generator.hpp"

#include <algorithm>
#include <cmath>

#include "bsc/util/errors.hpp"
#include "bsc/util/rng.hpp"

namespace bsc {

namespace {
constexpr double kHourSeconds = 3600.0;
constexpr int kWeekHours = 168;
}  // namespace

double ArrivalProfile::weekly_deliveries() const {
  double s = 0.0;
  for (double x : delivery_per_hour) s += x;
  return s;
}

double ArrivalProfile::weekly_retrievals() const {
  double s = 0.0;
  for (double x : retrieval_per_hour) s += x;
  return s;
}

ArrivalProfile make_default_profile(const ProfileParams& p) {
  if (p.weekly_orders < 0) throw ConfigError("profile: weekly_orders must be >= 0");
  if (p.retrieval_share < 0 || p.retrieval_share > 1)
    throw ConfigError("profile: retrieval_share must be in [0,1]");
  if (p.sku_count < 1) throw ConfigError("profile: sku_count must be >= 1");

  ArrivalProfile prof;
  prof.sku_count = p.sku_count;
  prof.zipf_s = p.zipf_s;
  prof.capacity = p.capacity;
  prof.input_docks = p.input_docks;
  prof.output_docks = p.output_docks;

  const double total_r = p.weekly_orders * p.retrieval_share;
  const double total_d = p.weekly_orders - total_r;
  for (int h = 0; h < kWeekHours; ++h) prof.delivery_per_hour[h] = total_d / kWeekHours;

  // Bimodal day shape inside the outbound window, repeated every day.
  std::array<double, 24> day{};
  double day_sum = 0.0;
  for (int h = 0; h < 24; ++h) {
    const double mid = h + 0.5;
    if (mid < p.window_open || mid > p.window_close) continue;
    auto bump = [&](double peak) {
      const double z = (mid - peak) / p.peak_width;
      return std::exp(-0.5 * z * z);
    };
    day[h] = bump(p.peak1) + bump(p.peak2);
    day_sum += day[h];
  }
  if (total_r > 0 && day_sum <= 0)
    throw ConfigError("profile: retrieval window admits no arrivals");
  for (int h = 0; h < kWeekHours; ++h)
    prof.retrieval_per_hour[h] = day_sum > 0 ? total_r / 7.0 * day[h % 24] / day_sum : 0.0;

  // Zipf popularity; the initial fill covers a few days of expected demand.
  std::vector<double> w(p.sku_count);
  double wsum = 0.0;
  for (int s = 0; s < p.sku_count; ++s) {
    w[s] = 1.0 / std::pow(s + 1, p.zipf_s);
    wsum += w[s];
  }
  prof.initial_fill.resize(p.sku_count);
  for (int s = 0; s < p.sku_count; ++s) {
    const double weekly = total_r * w[s] / wsum;
    prof.initial_fill[s] = static_cast<int>(std::ceil(weekly * p.initial_fill_days / 7.0));
  }
  int fill_total = 0;
  for (int f : prof.initial_fill) fill_total += f;
  if (p.capacity > 0 && fill_total > p.capacity)
    throw ConfigError("profile: initial fill " + std::to_string(fill_total) +
                      " exceeds capacity " + std::to_string(p.capacity));
  return prof;
}

namespace {

/// Exact arrival sampling for a piecewise-constant intensity: spend unit
/// exponential exposure across hour buckets.
std::vector<double> draw_arrivals(const std::array<double, 168>& per_hour, int weeks, Rng& rng) {
  std::vector<double> out;
  const double horizon = weeks * kWeekHours * kHourSeconds;
  double t = 0.0;
  double exposure = rng.exponential(1.0);
  while (t < horizon) {
    const int bucket = static_cast<int>(t / kHourSeconds);
    const double rate = per_hour[bucket % kWeekHours] / kHourSeconds;  // per second
    const double bucket_end = (bucket + 1) * kHourSeconds;
    if (rate <= 0.0) {
      t = bucket_end;
      continue;
    }
    const double capacity = rate * (bucket_end - t);
    if (exposure > capacity) {
      exposure -= capacity;
      t = bucket_end;
      continue;
    }
    t += exposure / rate;
    if (t >= horizon) break;
    out.push_back(t);
    exposure = rng.exponential(1.0);
  }
  return out;
}

}  // namespace

OrderStream generate(const ArrivalProfile& profile, int weeks, std::uint64_t seed) {
  if (weeks < 0) throw ConfigError("generate: weeks must be >= 0");
  const int n_sku = profile.sku_count;
  if (static_cast<int>(profile.initial_fill.size()) > n_sku)
    throw ConfigError("generate: initial_fill has more entries than sku_count");

  int fill_total = 0;
  for (int f : profile.initial_fill) fill_total += f;
  const double exp_r = profile.weekly_retrievals() * weeks;
  const double exp_d = profile.weekly_deliveries() * weeks;
  if (exp_r > fill_total + exp_d)
    throw ConfigError("generate: expected retrievals (" + std::to_string(exp_r) +
                      ") exceed initial fill plus expected deliveries (" +
                      std::to_string(fill_total + exp_d) + ")");

  Rng rng(seed);
  const std::vector<double> d_times = draw_arrivals(profile.delivery_per_hour, weeks, rng);
  const std::vector<double> r_times = draw_arrivals(profile.retrieval_per_hour, weeks, rng);

  std::vector<double> zipf(n_sku);
  for (int s = 0; s < n_sku; ++s) zipf[s] = 1.0 / std::pow(s + 1, profile.zipf_s);

  // Stock projections: `cum` replays the whole stream against the initial
  // fill, `week` replays the current week alone against it (episodes are
  // per-week). Retrievals must keep both non-negative.
  std::vector<int> cum(n_sku, 0), week(n_sku, 0);
  for (int s = 0; s < static_cast<int>(profile.initial_fill.size()); ++s) {
    cum[s] = profile.initial_fill[s];
    week[s] = profile.initial_fill[s];
  }
  int cum_total = fill_total, week_total = fill_total;
  int current_week = 0;
  int dropped_r = 0, dropped_d = 0;

  auto reset_week = [&](int w) {
    current_week = w;
    for (int s = 0; s < n_sku; ++s) week[s] = 0;
    week_total = 0;
    for (int s = 0; s < static_cast<int>(profile.initial_fill.size()); ++s) {
      week[s] = profile.initial_fill[s];
      week_total += profile.initial_fill[s];
    }
  };

  OrderStream stream;
  stream.seed = seed;
  std::size_t di = 0, ri = 0;
  while (di < d_times.size() || ri < r_times.size()) {
    const bool take_d =
        ri >= r_times.size() || (di < d_times.size() && d_times[di] <= r_times[ri]);
    const double t = take_d ? d_times[di] : r_times[ri];
    const int w = static_cast<int>(t / (kWeekHours * kHourSeconds));
    if (w != current_week) reset_week(w);

    OrderStream::Entry e;
    e.arrival_s = t;
    if (take_d) {
      ++di;
      if (profile.capacity > 0 &&
          (cum_total >= profile.capacity || week_total >= profile.capacity)) {
        ++dropped_d;  // warehouse would overflow; skip this inbound pallet
        continue;
      }
      e.kind = OrderKind::Delivery;
      // Zipf-weighted SKU.
      double wsum = 0.0;
      for (int s = 0; s < n_sku; ++s) wsum += zipf[s];
      double u = rng.uniform() * wsum;
      int sku = n_sku - 1;
      for (int s = 0; s < n_sku; ++s) {
        u -= zipf[s];
        if (u < 0) {
          sku = s;
          break;
        }
      }
      e.sku = sku;
      e.dock = static_cast<int>(rng.uniform_int(profile.input_docks));
      ++cum[sku];
      ++week[sku];
      ++cum_total;
      ++week_total;
    } else {
      ++ri;
      e.kind = OrderKind::Retrieval;
      // Zipf-weighted among SKUs whose projected stock stays non-negative.
      double wsum = 0.0;
      for (int s = 0; s < n_sku; ++s)
        if (cum[s] > 0 && week[s] > 0) wsum += zipf[s];
      if (wsum <= 0.0) {
        ++dropped_r;  // nothing retrievable at this instant
        continue;
      }
      double u = rng.uniform() * wsum;
      int sku = -1;
      for (int s = 0; s < n_sku; ++s) {
        if (!(cum[s] > 0 && week[s] > 0)) continue;
        sku = s;
        u -= zipf[s];
        if (u < 0) break;
      }
      e.sku = sku;
      e.dock = static_cast<int>(rng.uniform_int(profile.output_docks));
      --cum[sku];
      --week[sku];
      --cum_total;
      --week_total;
    }
    stream.entries.push_back(e);
  }

  stream.generator = "profile weeks=" + std::to_string(weeks) + " dropped_r=" +
                     std::to_string(dropped_r) + " dropped_d=" + std::to_string(dropped_d);
  return stream;
}

}  // namespace bsc
