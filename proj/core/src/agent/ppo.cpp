#include "bsc/agent/ppo.hpp"

#include <algorithm>
#include <cmath>

#include "bsc/agent/checkpoint.hpp"
#include "bsc/agent/distribution.hpp"
#include "bsc/util/errors.hpp"

namespace bsc {

LossStats clipped_loss(Mlp& policy, Mlp& value, const PpoBatch& batch, double clip_eps,
                       double vf_coef) {
  if (batch.n <= 0) throw SimError("clipped_loss: empty batch");
  policy.zero_grad();
  value.zero_grad();
  LossStats stats;
  std::vector<double> dlogits(batch.n_actions);
  int clipped = 0;
  double entropy_sum = 0.0;
  const double inv_n = 1.0 / batch.n;
  for (int i = 0; i < batch.n; ++i) {
    const std::span<const double> obs(&batch.obs[static_cast<std::size_t>(i) * batch.obs_dim],
                                      batch.obs_dim);
    const ActionMask mask(batch.masks.begin() + static_cast<std::size_t>(i) * batch.n_actions,
                          batch.masks.begin() + static_cast<std::size_t>(i + 1) * batch.n_actions);
    const auto& logits = policy.forward(obs);
    const MaskedCategorical dist = MaskedCategorical::make(logits, mask);
    const int a = batch.actions[i];
    const double logp = dist.log_prob(a);
    const double ratio = std::exp(logp - batch.old_log_probs[i]);
    const double adv = batch.advantages[i];
    const double unclipped = ratio * adv;
    const double clipped_obj = std::clamp(ratio, 1.0 - clip_eps, 1.0 + clip_eps) * adv;
    stats.policy += -std::min(unclipped, clipped_obj) * inv_n;
    if (std::abs(ratio - 1.0) > clip_eps) ++clipped;
    entropy_sum += dist.entropy();

    // The surrogate only propagates through the unclipped branch; when the
    // clipped branch is strictly smaller the ratio sits outside the band and
    // its derivative is zero.
    const double dobj_dlogp = unclipped <= clipped_obj ? ratio * adv : 0.0;
    const double dloss_dlogp = -dobj_dlogp * inv_n;
    if (dloss_dlogp != 0.0) {
      dist.dlogits_log_prob(a, dlogits);
      for (auto& g : dlogits) g *= dloss_dlogp;
      policy.backward(dlogits);
    }

    const double v = value.forward(obs)[0];
    const double verr = v - batch.returns[i];
    stats.value += verr * verr * inv_n;
    const double dv = vf_coef * 2.0 * verr * inv_n;
    value.backward(std::span<const double>(&dv, 1));
  }
  stats.entropy_loss = -entropy_sum * inv_n;
  stats.clip_fraction = static_cast<double>(clipped) / batch.n;
  stats.total = stats.policy + vf_coef * stats.value;
  if (!std::isfinite(stats.total))
    throw SimError("clipped_loss: non-finite loss (policy=" + std::to_string(stats.policy) +
                   " value=" + std::to_string(stats.value) + ")");
  return stats;
}

std::vector<double> gae(std::span<const double> rewards, std::span<const double> values,
                        std::span<const std::uint8_t> dones, double gamma, double lambda) {
  const std::size_t n = rewards.size();
  if (values.size() != n + 1 || dones.size() != n)
    throw SimError("gae: rewards/values/dones sizes must be n, n+1, n");
  std::vector<double> adv(n, 0.0);
  double carry = 0.0;
  for (std::size_t t = n; t-- > 0;) {
    const double nonterminal = dones[t] ? 0.0 : 1.0;
    const double delta = rewards[t] + gamma * values[t + 1] * nonterminal - values[t];
    carry = delta + gamma * lambda * nonterminal * carry;
    adv[t] = carry;
  }
  return adv;
}

std::pair<EpisodeMetrics, double> evaluate_episode(Env& env, const Mlp& policy_src,
                                                   std::uint64_t seed) {
  Mlp policy = policy_src;
  StepResult sr = env.reset(seed);
  double episode_reward = 0.0;
  while (!sr.done) {
    const auto& logits = policy.forward(sr.obs);
    const MaskedCategorical dist = MaskedCategorical::make(logits, sr.mask);
    sr = env.step(dist.argmax());
    episode_reward += sr.reward;
  }
  return {env.metrics(), episode_reward};
}

namespace {

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
  std::uint64_t x = base ^ (a * 0x9E3779B97F4A7C15ull) ^ (b + 0xD1B54A32D192ED03ull);
  x ^= x >> 33;
  x *= 0xFF51AFD7ED558CCDull;
  x ^= x >> 33;
  return x;
}

}  // namespace

TrainResult train(const TrainInputs& inputs, const TrainConfig& cfg) {
  if (inputs.n_envs < 1 || !inputs.make_env) throw ConfigError("train: no environments");
  if (cfg.rollout_steps < 1 || cfg.minibatch < 1) throw ConfigError("train: bad buffer sizes");

  auto probe = inputs.make_env(0);
  const int obs_dim = probe->observation_dim();
  const int n_actions = probe->action_count();
  probe.reset();

  const std::vector<int> policy_dims{obs_dim, cfg.hidden, cfg.hidden, n_actions};
  const std::vector<int> value_dims{obs_dim, cfg.hidden, cfg.hidden, 1};
  Mlp policy(policy_dims), value(value_dims);
  Rng rng(cfg.seed);
  policy.init_orthogonal(rng, std::sqrt(2.0), 0.01);
  value.init_orthogonal(rng, std::sqrt(2.0), 1.0);
  Adam opt_policy(policy.n_params(), cfg.learning_rate);
  Adam opt_value(value.n_params(), cfg.learning_rate);

  std::int64_t steps_done = 0;
  if (cfg.resume != nullptr) {
    const AgentCheckpoint& c = *cfg.resume;
    if (c.policy_dims != policy_dims || c.value_dims != value_dims)
      throw ConfigError("resume: checkpoint network shape does not match this configuration");
    policy.params() = c.policy_params;
    value.params() = c.value_params;
    if (!c.policy_m.empty()) {
      opt_policy.m() = c.policy_m;
      opt_policy.v() = c.policy_v;
      opt_value.m() = c.value_m;
      opt_value.v() = c.value_v;
      opt_policy.set_t(c.adam_t);
      opt_value.set_t(c.adam_t);
    }
    steps_done = c.step;
  }

  const int n_envs = inputs.n_envs;
  const int slice = std::max(1, cfg.rollout_steps / n_envs);
  const int buffer_n = slice * n_envs;

  std::vector<std::unique_ptr<Env>> envs;
  std::vector<StepResult> cur(n_envs);
  std::vector<double> ep_return(n_envs, 0.0);
  std::vector<std::int64_t> ep_count(n_envs, 0);
  for (int e = 0; e < n_envs; ++e) {
    envs.push_back(inputs.make_env(e));
    cur[e] = envs[e]->reset(mix_seed(cfg.seed, e, ep_count[e]));
  }

  TrainResult res;
  res.policy_dims = policy_dims;
  res.value_dims = value_dims;
  res.best_service_time = std::numeric_limits<double>::infinity();

  auto run_eval = [&](std::int64_t at_step) {
    double st_sum = 0.0, reward_sum = 0.0;
    for (int w = 0; w < n_envs; ++w) {
      auto ev = inputs.make_env(w);
      const auto [metrics, ret] = evaluate_episode(*ev, policy, mix_seed(cfg.seed, 0xEBA1, w));
      st_sum += metrics.avg_service_time_s;
      reward_sum += ret;
    }
    TrainLogRow row;
    row.step = at_step;
    row.is_eval = true;
    row.mean_episode_reward = reward_sum / n_envs;
    row.eval_service_time = st_sum / n_envs;
    res.log.push_back(row);
    if (row.eval_service_time < res.best_service_time) {
      res.best_service_time = row.eval_service_time;
      res.best_step = at_step;
      res.best_policy = policy.params();
      res.best_value = value.params();
    }
  };

  run_eval(steps_done);
  std::int64_t next_eval = steps_done + cfg.eval_every;
  std::int64_t last_eval_step = steps_done;

  // Rollout storage, env-major: index = env * slice + t.
  std::vector<double> b_obs(static_cast<std::size_t>(buffer_n) * obs_dim);
  std::vector<std::uint8_t> b_mask(static_cast<std::size_t>(buffer_n) * n_actions);
  std::vector<int> b_action(buffer_n);
  std::vector<double> b_logp(buffer_n), b_reward(buffer_n), b_value(buffer_n);
  std::vector<std::uint8_t> b_done(buffer_n);
  std::vector<double> b_adv(buffer_n), b_ret(buffer_n);
  double last_mean_ep_reward = 0.0;

  while (steps_done < cfg.total_steps) {
    std::vector<double> finished_returns;
    for (int t = 0; t < slice; ++t) {
      for (int e = 0; e < n_envs; ++e) {
        const std::size_t idx = static_cast<std::size_t>(e) * slice + t;
        const auto& logits = policy.forward(cur[e].obs);
        const MaskedCategorical dist = MaskedCategorical::make(logits, cur[e].mask);
        const int action = dist.sample(rng);
        std::copy(cur[e].obs.begin(), cur[e].obs.end(), b_obs.begin() + idx * obs_dim);
        std::copy(cur[e].mask.begin(), cur[e].mask.end(), b_mask.begin() + idx * n_actions);
        b_action[idx] = action;
        b_logp[idx] = dist.log_prob(action);
        b_value[idx] = value.forward(cur[e].obs)[0];
        const StepResult next = envs[e]->step(action);
        b_reward[idx] = next.reward;
        b_done[idx] = next.done ? 1 : 0;
        ep_return[e] += next.reward;
        if (next.done) {
          finished_returns.push_back(ep_return[e]);
          ep_return[e] = 0.0;
          ++ep_count[e];
          cur[e] = envs[e]->reset(mix_seed(cfg.seed, e, ep_count[e]));
        } else {
          cur[e] = next;
        }
      }
    }
    steps_done += buffer_n;

    for (int e = 0; e < n_envs; ++e) {
      const std::size_t base = static_cast<std::size_t>(e) * slice;
      std::vector<double> values(slice + 1);
      std::copy(b_value.begin() + base, b_value.begin() + base + slice, values.begin());
      values[slice] = b_done[base + slice - 1] ? 0.0 : value.forward(cur[e].obs)[0];
      const auto adv =
          gae(std::span<const double>(&b_reward[base], slice),
              std::span<const double>(values.data(), slice + 1),
              std::span<const std::uint8_t>(&b_done[base], slice), cfg.gamma, cfg.gae_lambda);
      for (int t = 0; t < slice; ++t) {
        b_adv[base + t] = adv[t];
        b_ret[base + t] = adv[t] + b_value[base + t];
      }
    }

    std::vector<int> perm(buffer_n);
    for (int i = 0; i < buffer_n; ++i) perm[i] = i;
    double entropy_loss_sum = 0.0;
    int entropy_loss_count = 0;
    bool first_minibatch = true;
    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
      for (int i = buffer_n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.uniform_int(static_cast<std::uint64_t>(i) + 1)]);
      for (int start = 0; start < buffer_n; start += cfg.minibatch) {
        const int count = std::min(cfg.minibatch, buffer_n - start);
        PpoBatch batch;
        batch.n = count;
        batch.obs_dim = obs_dim;
        batch.n_actions = n_actions;
        batch.obs.resize(static_cast<std::size_t>(count) * obs_dim);
        batch.masks.resize(static_cast<std::size_t>(count) * n_actions);
        batch.actions.resize(count);
        batch.old_log_probs.resize(count);
        batch.advantages.resize(count);
        batch.returns.resize(count);
        for (int i = 0; i < count; ++i) {
          const std::size_t src = perm[start + i];
          std::copy_n(b_obs.begin() + src * obs_dim, obs_dim, batch.obs.begin() + i * obs_dim);
          std::copy_n(b_mask.begin() + src * n_actions, n_actions,
                      batch.masks.begin() + i * n_actions);
          batch.actions[i] = b_action[src];
          batch.old_log_probs[i] = b_logp[src];
          batch.advantages[i] = b_adv[src];
          batch.returns[i] = b_ret[src];
        }
        // Per-minibatch advantage normalization.
        double mean = 0.0;
        for (double a : batch.advantages) mean += a;
        mean /= count;
        double var = 0.0;
        for (double a : batch.advantages) var += (a - mean) * (a - mean);
        const double std_dev = std::sqrt(var / count) + 1e-8;
        for (double& a : batch.advantages) a = (a - mean) / std_dev;

        const LossStats stats = clipped_loss(policy, value, batch, cfg.clip_eps, cfg.vf_coef);
        if (first_minibatch && cfg.update_observer) {
          UpdateCapture cap;
          cap.batch = batch;
          cap.stats = stats;
          cap.policy_dims = policy_dims;
          cap.policy_params = policy.params();
          cfg.update_observer(cap);
        }
        first_minibatch = false;
        opt_policy.step(policy.params(), policy.grads());
        opt_value.step(value.params(), value.grads());
        entropy_loss_sum += stats.entropy_loss;
        ++entropy_loss_count;
      }
    }

    if (!finished_returns.empty()) {
      double s = 0.0;
      for (double r : finished_returns) s += r;
      last_mean_ep_reward = s / finished_returns.size();
    }
    TrainLogRow row;
    row.step = steps_done;
    row.is_eval = false;
    row.mean_episode_reward = last_mean_ep_reward;
    row.entropy_loss = entropy_loss_sum / std::max(1, entropy_loss_count);
    res.log.push_back(row);

    if (steps_done >= next_eval) {
      run_eval(steps_done);
      last_eval_step = steps_done;
      next_eval += cfg.eval_every;
    }
  }

  if (last_eval_step != steps_done) run_eval(steps_done);

  res.steps_done = steps_done;
  res.last_policy = policy.params();
  res.last_value = value.params();
  res.policy_m = opt_policy.m();
  res.policy_v = opt_policy.v();
  res.value_m = opt_value.m();
  res.value_v = opt_value.v();
  res.adam_t = opt_policy.t();
  return res;
}

}  // namespace bsc
