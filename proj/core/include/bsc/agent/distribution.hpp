#pragma once

#include <span>
#include <vector>

#include "bsc/rlenv/mask.hpp"
#include "bsc/util/rng.hpp"

namespace bsc {

/// Categorical distribution over a masked discrete action set. Masked actions
/// are excluded from the normalization entirely, so their probability is
/// exactly zero through sampling, log-probability and gradient paths.
struct MaskedCategorical {
  std::vector<double> probs;      // 0 for masked entries
  std::vector<double> log_probs;  // meaningful only for valid entries
  std::vector<std::uint8_t> valid;

  static MaskedCategorical make(std::span<const double> logits, const ActionMask& mask);

  int sample(Rng& rng) const;
  /// Highest-probability valid action; ties resolve to the lowest index.
  int argmax() const;
  double log_prob(int action) const;
  double entropy() const;

  /// d log_prob(action) / d logits; masked entries receive exactly 0.
  void dlogits_log_prob(int action, std::span<double> out) const;
};

}  // namespace bsc
