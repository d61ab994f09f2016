#include "bsc/rlenv/reward.hpp"

#include "bsc/util/errors.hpp"

namespace bsc {

RewardKind reward_kind_from_name(const std::string& name) {
  if (name == "service_time") return RewardKind::ServiceTime;
  if (name == "queue") return RewardKind::Queue;
  if (name == "composite") return RewardKind::Composite;
  if (name == "shaped") return RewardKind::Shaped;
  throw ConfigError("unknown reward '" + name + "' (service_time|queue|composite|shaped)");
}

const char* reward_name(RewardKind k) {
  switch (k) {
    case RewardKind::ServiceTime: return "service_time";
    case RewardKind::Queue: return "queue";
    case RewardKind::Composite: return "composite";
    case RewardKind::Shaped: return "shaped";
  }
  return "?";
}

double reward(const RewardSpec& spec, const TransitionContext& ctx) {
  const double queue_term = -(static_cast<double>(ctx.queued_retrieval) / spec.cap_retrieval +
                              static_cast<double>(ctx.queued_delivery) / spec.cap_delivery);
  const double st_term = -ctx.st_avg_s / spec.st_cap_s;
  switch (spec.kind) {
    case RewardKind::ServiceTime:
      return st_term;
    case RewardKind::Queue:
      return queue_term;
    case RewardKind::Composite: {
      const bool pending = ctx.queued_retrieval + ctx.queued_delivery > 0;
      return queue_term + st_term + (pending ? spec.composite_beta * ctx.free_amr_frac : 0.0);
    }
    case RewardKind::Shaped: {
      double r = queue_term;
      if (ctx.action_percent > 0) {
        if (!ctx.station_free_at_action) r -= spec.shaped_penalty;
        if (ctx.free_amrs_after_action == 0 && ctx.queued_after_action > 0)
          r -= spec.shaped_penalty;
        if (ctx.queued_after_action == 0) r += spec.shaped_bonus;
        if (ctx.station_free_at_action) r += spec.shaped_bonus;
      }
      return r;
    }
  }
  throw SimError("reward: unhandled kind");
}

}  // namespace bsc
