#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bsc/agent/ppo.hpp"

namespace bsc {

/// Versioned text dump of the agent: network shapes, weights (hex floats, so
/// save/load round-trips bit-exactly), the step counter and optimizer state
/// for resuming, plus a hash of the environment-relevant configuration.
struct AgentCheckpoint {
  std::uint32_t version = 1;
  std::uint64_t config_hash = 0;
  std::int64_t step = 0;
  std::int64_t adam_t = 0;
  std::vector<int> policy_dims, value_dims;
  std::vector<double> policy_params, value_params;
  std::vector<double> policy_m, policy_v, value_m, value_v;  // empty on eval-only dumps

  void save(const std::string& path) const;
  static AgentCheckpoint load(const std::string& path);

  /// `best`: the best-evaluation weights without optimizer state (an
  /// evaluation artifact); otherwise the final weights with full resume state.
  static AgentCheckpoint from_result(const TrainResult& result, std::uint64_t config_hash,
                                     bool best);
};

/// FNV-1a over a canonical configuration string; stored in checkpoints and
/// verified before evaluation.
std::uint64_t config_fingerprint(const std::string& canonical);

}  // namespace bsc
