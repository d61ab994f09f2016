#include "bsc/battery/battery.hpp"

#include "bsc/util/errors.hpp"

namespace bsc {

double BatteryModel::charge_duration_s(double current_pct, double target_pct) const {
  if (target_pct <= current_pct)
    throw SimError("charge_duration_s: target " + std::to_string(target_pct) +
                   "% not above current " + std::to_string(current_pct) + "%");
  return (target_pct - current_pct) / 100.0 * full_charge_s;
}

int ActionSpace::index_of(int percent) const {
  for (int i = 0; i < size(); ++i)
    if (thresholds[i] == percent) return i;
  return -1;
}

}  // namespace bsc
