#include "bsc/rlenv/env.hpp"

#include "bsc/util/errors.hpp"

namespace bsc {

Env::Env(EnvConfig cfg, OrderStream week) : cfg_(std::move(cfg)), week_(std::move(week)) {
  if (!cfg_.sim.layout) throw ConfigError("env: layout is required");
  cfg_.caps.fill_defaults(*cfg_.sim.layout, /*sku_count_hint=*/20);
  cfg_.reward.cap_retrieval = cfg_.sim.cap_retrieval;
  cfg_.reward.cap_delivery = cfg_.sim.cap_delivery;
}

int Env::observation_dim() const {
  return observation_size(cfg_.sim.num_amrs, static_cast<int>(cfg_.sim.layout->stations().size()));
}

ActionMask Env::current_mask() const {
  if (pending_amr_ < 0) return ActionMask(cfg_.sim.action_space.size(), 1);
  const auto& s = sim_->state();
  const double pct = s.battery.pct_of(s.fleet[pending_amr_].battery_ah);
  return action_mask(pct, cfg_.sim.action_space);
}

StepResult Env::reset(std::uint64_t seed) {
  episode_seed_ = seed;
  sim_ = std::make_unique<Simulation>(cfg_.sim, week_);
  pending_amr_ = -1;
  return advance(/*scored=*/false, 0, false, 0, 0);
}

StepResult Env::step(int action_index) {
  if (!sim_) throw SimError("env: step before reset");
  if (pending_amr_ < 0) throw SimError("env: step without a pending decision");
  if (action_index < 0 || action_index >= cfg_.sim.action_space.size())
    throw SimError("env: action index " + std::to_string(action_index) + " out of range");
  const ActionMask mask = current_mask();
  if (!mask[action_index])
    throw SimError("env: masked action index " + std::to_string(action_index));

  const int percent = cfg_.sim.action_space.thresholds[action_index];
  const bool station_free = sim_->state().free_station_count() > 0;
  sim_->resume_with(ChargeTarget{percent});
  pending_amr_ = -1;
  const int free_after = sim_->state().free_amr_count();
  const int queued_after =
      sim_->state().queues.retrieval_len() + sim_->state().queues.delivery_len();
  return advance(/*scored=*/true, percent, station_free, free_after, queued_after);
}

StepResult Env::advance(bool scored, int action_percent, bool station_free_at_action,
                        int free_after, int queued_after) {
  const auto request = sim_->run_until_decision();
  StepResult out;
  if (request) {
    pending_amr_ = request->amr;
    out.done = false;
  } else {
    pending_amr_ = -1;
    out.done = true;
  }
  const WarehouseState& s = sim_->state();
  out.obs = observe(s, s.clock, cfg_.caps);
  out.mask = current_mask();
  if (scored) {
    TransitionContext ctx;
    ctx.st_avg_s = s.metrics.avg_service_time();
    ctx.queued_retrieval = s.queues.retrieval_len();
    ctx.queued_delivery = s.queues.delivery_len();
    ctx.free_amr_frac = static_cast<double>(s.free_amr_count()) / s.fleet.size();
    ctx.action_percent = action_percent;
    ctx.station_free_at_action = station_free_at_action;
    ctx.free_amrs_after_action = free_after;
    ctx.queued_after_action = queued_after;
    out.reward = reward(cfg_.reward, ctx);
  }
  return out;
}

}  // namespace bsc
