#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bsc/util/rng.hpp"

namespace bsc {

/// Fully connected tanh network with a linear head. Parameters and gradients
/// live in single flat vectors so optimizers, finite-difference checks and
/// checkpoints can treat the model as one parameter array.
///
/// forward() caches activations for a single sample; backward() consumes the
/// cache and accumulates parameter gradients.
class Mlp {
 public:
  explicit Mlp(std::vector<int> dims);

  /// Orthogonal weight init (gain per hidden layer, separate output gain),
  /// zero biases. Deterministic for a given generator state.
  void init_orthogonal(Rng& rng, double hidden_gain, double out_gain);

  const std::vector<double>& forward(std::span<const double> x);
  /// dL/d(output) for the last forward() call; accumulates into grads.
  void backward(std::span<const double> dout);

  void zero_grad();
  int input_dim() const { return dims_.front(); }
  int output_dim() const { return dims_.back(); }
  const std::vector<int>& dims() const { return dims_; }

  std::size_t n_params() const { return params_.size(); }
  std::vector<double>& params() { return params_; }
  const std::vector<double>& params() const { return params_; }
  std::vector<double>& grads() { return grads_; }
  const std::vector<double>& grads() const { return grads_; }

 private:
  struct LayerView {
    std::size_t w_off = 0, b_off = 0;
    int in = 0, out = 0;
  };

  std::vector<int> dims_;
  std::vector<LayerView> layers_;
  std::vector<double> params_, grads_;
  std::vector<std::vector<double>> acts_;  // acts_[0] = input, acts_[i] = layer i output
};

/// Adam with the canonical bias correction. State is exposed for checkpoints.
class Adam {
 public:
  Adam(std::size_t n, double lr, double beta1 = 0.9, double beta2 = 0.999, double eps = 1e-5);

  void step(std::vector<double>& params, const std::vector<double>& grads);

  std::vector<double>& m() { return m_; }
  std::vector<double>& v() { return v_; }
  const std::vector<double>& m() const { return m_; }
  const std::vector<double>& v() const { return v_; }
  std::int64_t t() const { return t_; }
  void set_t(std::int64_t t) { t_ = t; }
  double lr() const { return lr_; }

 private:
  double lr_, beta1_, beta2_, eps_;
  std::vector<double> m_, v_;
  std::int64_t t_ = 0;
};

}  // namespace bsc
