#include "bsc/agent/mlp.hpp"

#include <cmath>

#include "bsc/util/errors.hpp"

namespace bsc {

Mlp::Mlp(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.size() < 2) throw ConfigError("mlp: need at least input and output dims");
  std::size_t off = 0;
  for (std::size_t i = 0; i + 1 < dims_.size(); ++i) {
    LayerView l;
    l.in = dims_[i];
    l.out = dims_[i + 1];
    l.w_off = off;
    off += static_cast<std::size_t>(l.in) * l.out;
    l.b_off = off;
    off += l.out;
    layers_.push_back(l);
  }
  params_.assign(off, 0.0);
  grads_.assign(off, 0.0);
  acts_.resize(layers_.size() + 1);
}

void Mlp::init_orthogonal(Rng& rng, double hidden_gain, double out_gain) {
  for (std::size_t li = 0; li < layers_.size(); ++li) {
    const LayerView& l = layers_[li];
    const double gain = li + 1 == layers_.size() ? out_gain : hidden_gain;
    // Gaussian matrix, then modified Gram-Schmidt on the shorter side.
    std::vector<double> m(static_cast<std::size_t>(l.out) * l.in);
    for (auto& x : m) x = rng.normal();
    const bool rows_short = l.out <= l.in;
    const int k = rows_short ? l.out : l.in;
    const int len = rows_short ? l.in : l.out;
    auto at = [&](int vec, int i) -> double& {
      return rows_short ? m[static_cast<std::size_t>(vec) * l.in + i]
                        : m[static_cast<std::size_t>(i) * l.in + vec];
    };
    for (int v = 0; v < k; ++v) {
      for (int p = 0; p < v; ++p) {
        double dot = 0.0;
        for (int i = 0; i < len; ++i) dot += at(v, i) * at(p, i);
        for (int i = 0; i < len; ++i) at(v, i) -= dot * at(p, i);
      }
      double norm = 0.0;
      for (int i = 0; i < len; ++i) norm += at(v, i) * at(v, i);
      norm = std::sqrt(norm);
      if (norm < 1e-12) norm = 1.0;
      for (int i = 0; i < len; ++i) at(v, i) /= norm;
    }
    for (std::size_t i = 0; i < m.size(); ++i) params_[l.w_off + i] = gain * m[i];
    for (int i = 0; i < l.out; ++i) params_[l.b_off + i] = 0.0;
  }
}

const std::vector<double>& Mlp::forward(std::span<const double> x) {
  if (static_cast<int>(x.size()) != dims_.front())
    throw SimError("mlp: input size mismatch");
  acts_[0].assign(x.begin(), x.end());
  for (std::size_t li = 0; li < layers_.size(); ++li) {
    const LayerView& l = layers_[li];
    const auto& in = acts_[li];
    auto& out = acts_[li + 1];
    out.assign(l.out, 0.0);
    for (int o = 0; o < l.out; ++o) {
      double z = params_[l.b_off + o];
      const double* wrow = &params_[l.w_off + static_cast<std::size_t>(o) * l.in];
      for (int i = 0; i < l.in; ++i) z += wrow[i] * in[i];
      out[o] = li + 1 < layers_.size() ? std::tanh(z) : z;
    }
  }
  return acts_.back();
}

void Mlp::backward(std::span<const double> dout) {
  if (static_cast<int>(dout.size()) != dims_.back())
    throw SimError("mlp: dout size mismatch");
  std::vector<double> g(dout.begin(), dout.end());
  for (int li = static_cast<int>(layers_.size()) - 1; li >= 0; --li) {
    const LayerView& l = layers_[li];
    const auto& in = acts_[li];
    // Hidden layers cached post-tanh outputs: dz = g * (1 - a^2).
    if (li + 1 < static_cast<int>(layers_.size())) {
      const auto& a = acts_[li + 1];
      for (int o = 0; o < l.out; ++o) g[o] *= 1.0 - a[o] * a[o];
    }
    std::vector<double> gin(l.in, 0.0);
    for (int o = 0; o < l.out; ++o) {
      const double go = g[o];
      grads_[l.b_off + o] += go;
      double* gw = &grads_[l.w_off + static_cast<std::size_t>(o) * l.in];
      const double* wrow = &params_[l.w_off + static_cast<std::size_t>(o) * l.in];
      for (int i = 0; i < l.in; ++i) {
        gw[i] += go * in[i];
        gin[i] += go * wrow[i];
      }
    }
    g = std::move(gin);
  }
}

void Mlp::zero_grad() { std::fill(grads_.begin(), grads_.end(), 0.0); }

Adam::Adam(std::size_t n, double lr, double beta1, double beta2, double eps)
    : lr_(lr), beta1_(beta1), beta2_(beta2), eps_(eps), m_(n, 0.0), v_(n, 0.0) {}

void Adam::step(std::vector<double>& params, const std::vector<double>& grads) {
  if (params.size() != m_.size() || grads.size() != m_.size())
    throw SimError("adam: size mismatch");
  ++t_;
  const double bc1 = 1.0 - std::pow(beta1_, static_cast<double>(t_));
  const double bc2 = 1.0 - std::pow(beta2_, static_cast<double>(t_));
  for (std::size_t i = 0; i < params.size(); ++i) {
    m_[i] = beta1_ * m_[i] + (1.0 - beta1_) * grads[i];
    v_[i] = beta2_ * v_[i] + (1.0 - beta2_) * grads[i] * grads[i];
    const double mhat = m_[i] / bc1;
    const double vhat = v_[i] / bc2;
    params[i] -= lr_ * mhat / (std::sqrt(vhat) + eps_);
  }
}

}  // namespace bsc
