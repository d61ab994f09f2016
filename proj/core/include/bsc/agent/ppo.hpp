#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "bsc/agent/mlp.hpp"
#include "bsc/rlenv/env.hpp"

namespace bsc {

/// One flat minibatch of transitions.
struct PpoBatch {
  int n = 0;
  int obs_dim = 0;
  int n_actions = 0;
  std::vector<double> obs;          // n * obs_dim
  std::vector<std::uint8_t> masks;  // n * n_actions
  std::vector<int> actions;
  std::vector<double> old_log_probs;
  std::vector<double> advantages;   // normalized by the caller
  std::vector<double> returns;
};

struct LossStats {
  double total = 0.0;
  double policy = 0.0;
  double value = 0.0;
  double entropy_loss = 0.0;  // negative mean policy entropy; logged, not optimized
  double clip_fraction = 0.0;
};

/// Clipped-surrogate PPO loss over a batch:
///   policy term  -mean(min(r*A, clip(r, 1-eps, 1+eps)*A))
///   value term   vf_coef * mean((V - return)^2)
/// Entropy is reported but carries no weight in the total. Gradients are
/// accumulated into the networks' grad buffers (zeroed here first). Throws on
/// a non-finite loss.
LossStats clipped_loss(Mlp& policy, Mlp& value, const PpoBatch& batch, double clip_eps,
                       double vf_coef);

/// Generalized advantage estimation. `values` carries one extra entry: the
/// bootstrap value of the state after the last step (ignored when that step
/// terminated; terminal states bootstrap zero).
std::vector<double> gae(std::span<const double> rewards, std::span<const double> values,
                        std::span<const std::uint8_t> dones, double gamma, double lambda);

struct AgentCheckpoint;  // checkpoint.hpp

/// Captured state of one update, for logging cross-checks.
struct UpdateCapture {
  PpoBatch batch;
  LossStats stats;
  std::vector<int> policy_dims;
  std::vector<double> policy_params;
};

struct TrainConfig {
  std::int64_t total_steps = 200000;
  std::int64_t eval_every = 200000;
  int rollout_steps = 2048;
  int minibatch = 64;
  int epochs = 10;
  double clip_eps = 0.2;
  double gamma = 0.99;
  double gae_lambda = 0.95;
  double learning_rate = 3e-4;
  double vf_coef = 0.5;
  double ent_coef = 0.0;  // fixed: entropy is logged, never added to the loss
  int hidden = 64;
  std::uint64_t seed = 1;
  std::uint64_t config_hash = 0;
  const AgentCheckpoint* resume = nullptr;
  /// Called once per update with the first minibatch, before the optimizer
  /// steps on it (parameters match the captured loss exactly).
  std::function<void(const UpdateCapture&)> update_observer;
};

struct TrainLogRow {
  std::int64_t step = 0;
  bool is_eval = false;
  double mean_episode_reward = 0.0;
  double entropy_loss = 0.0;      // update rows
  double eval_service_time = 0.0; // eval rows
};

struct TrainResult {
  std::vector<int> policy_dims, value_dims;
  std::vector<double> best_policy, best_value;
  std::vector<double> last_policy, last_value;
  double best_service_time = 0.0;
  std::int64_t best_step = 0;
  std::int64_t steps_done = 0;
  std::vector<TrainLogRow> log;
  // Optimizer state at the end, for checkpoint resume.
  std::vector<double> policy_m, policy_v, value_m, value_v;
  std::int64_t adam_t = 0;
};

/// Factory-based training: environment `i` of `n_envs` wraps training week i.
/// Evaluation episodes run the deterministic (argmax) policy over all weeks;
/// the checkpoint with the best mean service time is retained. An evaluation
/// always runs at step 0 (the untrained baseline) and after the final update.
struct TrainInputs {
  int n_envs = 1;
  std::function<std::unique_ptr<Env>(int)> make_env;
};

TrainResult train(const TrainInputs& inputs, const TrainConfig& cfg);

/// Runs one deterministic episode; returns (metrics, episode reward).
std::pair<EpisodeMetrics, double> evaluate_episode(Env& env, const Mlp& policy_src,
                                                   std::uint64_t seed);

}  // namespace bsc
