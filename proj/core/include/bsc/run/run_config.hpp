#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bsc/engine/simulation.hpp"
#include "bsc/orders/generator.hpp"
#include "bsc/rlenv/env.hpp"
#include "bsc/strategies/strategies.hpp"
#include "bsc/util/kv_config.hpp"

namespace bsc {

/// Fully resolved run setup: geometry, fleet, battery, strategy/agent, reward
/// and order source, built from a KvConfig (file defaults plus overrides).
struct RunConfig {
  KvConfig raw;  // resolved key-value view, dumped next to run outputs

  std::shared_ptr<const WarehouseLayout> layout;
  std::shared_ptr<Router> router;
  BatteryModel battery;
  int num_amrs = 40;
  double initial_battery_pct = 100.0;
  int cap_retrieval = 330;
  int cap_delivery = 240;
  ActionSpace action_space = ActionSpace::full();
  StrategyConfig strategy;
  std::string checkpoint_path;
  RewardSpec reward;
  FeatureCaps caps;
  std::vector<std::pair<int, int>> initial_fill;
  std::uint64_t seed = 1;

  static RunConfig load(const KvConfig& kv);

  /// Orders: from `orders.file` or the seeded generator (`orders.generate`).
  OrderStream load_orders() const;

  SimConfig sim_config(bool interrupt_enabled) const;
  EnvConfig env_config(bool interrupt_enabled) const;

  /// Canonical description of everything a checkpoint depends on.
  std::string canonical_env_string() const;
  std::uint64_t env_hash() const;
};

/// `sku,count` rows (a `sku,count` header line is accepted and skipped).
std::vector<std::pair<int, int>> load_fill_file(const std::string& path);
void save_fill_file(const std::string& path, const std::vector<std::pair<int, int>>& fill);

}  // namespace bsc
