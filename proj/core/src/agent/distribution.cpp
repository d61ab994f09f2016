#include "bsc/agent/distribution.hpp"

#include <cmath>
#include <limits>

#include "bsc/util/errors.hpp"

namespace bsc {

MaskedCategorical MaskedCategorical::make(std::span<const double> logits, const ActionMask& mask) {
  if (logits.size() != mask.size()) throw SimError("masked categorical: size mismatch");
  MaskedCategorical d;
  d.valid.assign(mask.begin(), mask.end());
  d.probs.assign(logits.size(), 0.0);
  d.log_probs.assign(logits.size(), -std::numeric_limits<double>::infinity());

  double max_logit = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < logits.size(); ++i)
    if (mask[i] && logits[i] > max_logit) max_logit = logits[i];
  if (!std::isfinite(max_logit))
    throw SimError("masked categorical: no valid action");

  double sum = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i)
    if (mask[i]) sum += std::exp(logits[i] - max_logit);
  const double log_norm = std::log(sum) + max_logit;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    if (!mask[i]) continue;
    d.log_probs[i] = logits[i] - log_norm;
    d.probs[i] = std::exp(d.log_probs[i]);
  }
  return d;
}

int MaskedCategorical::sample(Rng& rng) const {
  const double u = rng.uniform();
  double acc = 0.0;
  int last_valid = -1;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (!valid[i]) continue;
    last_valid = static_cast<int>(i);
    acc += probs[i];
    if (u < acc) return static_cast<int>(i);
  }
  return last_valid;  // guards against rounding in the cumulative sum
}

int MaskedCategorical::argmax() const {
  int best = -1;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (!valid[i]) continue;
    if (best < 0 || probs[i] > probs[best]) best = static_cast<int>(i);
  }
  return best;
}

double MaskedCategorical::log_prob(int action) const {
  if (action < 0 || action >= static_cast<int>(probs.size()) || !valid[action])
    throw SimError("log_prob of masked action");
  return log_probs[action];
}

double MaskedCategorical::entropy() const {
  double h = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i)
    if (valid[i] && probs[i] > 0.0) h -= probs[i] * log_probs[i];
  return h;
}

void MaskedCategorical::dlogits_log_prob(int action, std::span<double> out) const {
  if (out.size() != probs.size()) throw SimError("dlogits: size mismatch");
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (!valid[i]) {
      out[i] = 0.0;
      continue;
    }
    out[i] = (static_cast<int>(i) == action ? 1.0 : 0.0) - probs[i];
  }
}

}  // namespace bsc
