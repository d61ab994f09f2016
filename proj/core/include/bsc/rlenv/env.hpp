#pragma once

#include <memory>

#include "bsc/engine/simulation.hpp"
#include "bsc/rlenv/features.hpp"
#include "bsc/rlenv/mask.hpp"
#include "bsc/rlenv/reward.hpp"
#include "bsc/run/metrics.hpp"

namespace bsc {

struct EnvConfig {
  SimConfig sim;
  RewardSpec reward;
  FeatureCaps caps;  // zero entries are derived from the layout
};

struct StepResult {
  Observation obs;
  ActionMask mask;
  double reward = 0.0;
  bool done = false;
};

/// Gym-style wrapper over one simulation instance: sequential charging
/// decisions, masked discrete actions, reward evaluated at the decision point
/// each step arrives at. Episodes cover one order stream (a week).
class Env {
 public:
  Env(EnvConfig cfg, OrderStream week);

  /// Starts a fresh episode and advances to the first decision (or straight
  /// to done for an empty stream). The seed is recorded with the episode;
  /// the simulation itself is deterministic.
  StepResult reset(std::uint64_t seed);

  /// Applies the action (by index into the action space). Masked actions are
  /// caller bugs and throw.
  StepResult step(int action_index);

  int action_count() const { return cfg_.sim.action_space.size(); }
  const ActionSpace& space() const { return cfg_.sim.action_space; }
  int observation_dim() const;
  bool done() const { return !sim_ || sim_->finished(); }
  int pending_amr() const { return pending_amr_; }
  const WarehouseState& state() const { return sim_->state(); }
  const Simulation& sim() const { return *sim_; }
  std::uint64_t episode_seed() const { return episode_seed_; }

  /// Mask for the pending decision's vehicle.
  ActionMask current_mask() const;

  /// Finished-episode metrics.
  EpisodeMetrics metrics() const { return build_metrics(*sim_); }

 private:
  StepResult advance(bool scored, int action_percent, bool station_free_at_action,
                     int free_after, int queued_after);

  EnvConfig cfg_;
  OrderStream week_;
  std::unique_ptr<Simulation> sim_;
  int pending_amr_ = -1;
  std::uint64_t episode_seed_ = 0;
};

}  // namespace bsc
