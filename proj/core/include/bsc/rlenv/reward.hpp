#pragma once

#include <cstdint>
#include <string>

namespace bsc {

enum class RewardKind : std::uint8_t { ServiceTime, Queue, Composite, Shaped };

RewardKind reward_kind_from_name(const std::string& name);
const char* reward_name(RewardKind k);

struct RewardSpec {
  RewardKind kind = RewardKind::Queue;
  double st_cap_s = 3600.0;      // service-time normalizer
  double composite_beta = 1.0;   // free-AMR bonus weight
  double shaped_bonus = 1.0;
  double shaped_penalty = 1.0;
  int cap_retrieval = 330;
  int cap_delivery = 240;
};

/// Everything a reward variant may look at. Queue/service statistics are
/// taken at the decision point being scored (the state the step arrived at);
/// the action clauses describe the previous action and the conditions at the
/// moment it was applied.
struct TransitionContext {
  double st_avg_s = 0.0;
  int queued_retrieval = 0;
  int queued_delivery = 0;
  double free_amr_frac = 0.0;
  int action_percent = 0;
  bool station_free_at_action = false;
  int free_amrs_after_action = 0;
  int queued_after_action = 0;
};

/// The four reward variants:
///  - ServiceTime: -ST_avg / st_cap
///  - Queue: -(q_r/cap_r + q_d/cap_d)
///  - Composite: queue + service time + beta * free-fraction bonus while
///    orders are pending
///  - Shaped: queue plus action-conditioned penalties (charging with no free
///    station; charging away the last free vehicle while orders wait) and
///    bonuses (charging when nothing is queued; charging into a free station)
double reward(const RewardSpec& spec, const TransitionContext& ctx);

}  // namespace bsc
