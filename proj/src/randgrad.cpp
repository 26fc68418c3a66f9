// Copyright 2026 The relulab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "relulab/randgrad.hpp"

#include <stdexcept>

#include "relulab/norms.hpp"

namespace relulab {

RandomizedPattern sample_dbar(const NetworkParams& net, const Vector& x,
                              RngStream& rng) {
  const ForwardTrace trace = forward(net, x);
  RandomizedPattern pattern;
  pattern.layers.resize(net.L);
  for (std::size_t l = 0; l < net.L; ++l) {
    pattern.layers[l].resize(net.N);
    for (std::size_t i = 0; i < net.N; ++i) {
      const double z = trace.preactivations[l][i];
      if (z > 0.0) {
        pattern.layers[l][i] = 1;
      } else if (z < 0.0) {
        pattern.layers[l][i] = 0;
      } else {
        pattern.layers[l][i] = rng.next_bit() ? 1 : 0;
      }
    }
  }
  return pattern;
}

SurrogatePattern sample_dhat(std::size_t N, std::size_t L, RngStream& rng) {
  if (N < 1 || L < 1) {
    throw std::invalid_argument("sample_dhat: N, L must be >= 1");
  }
  SurrogatePattern pattern;
  pattern.layers.resize(L);
  for (auto& layer : pattern.layers) {
    layer.resize(N);
    for (auto& bit : layer) bit = rng.next_bit() ? 1 : 0;
  }
  return pattern;
}

NetworkParams force_zero_preactivation(NetworkParams net, std::size_t layer,
                                       std::size_t neuron, const Vector& x) {
  if (layer >= net.L || neuron >= net.N) {
    throw std::invalid_argument("force_zero_preactivation: index out of range");
  }
  const ForwardTrace trace = forward(net, x);
  const Vector& in =
      layer == 0 ? trace.input : trace.activations[layer - 1];
  double wx = 0.0;
  for (std::size_t j = 0; j < in.size(); ++j) {
    wx += net.weights[layer].at(neuron, j) * in[j];
  }
  net.biases[layer][neuron] = -wx;
  return net;
}

namespace {

std::vector<std::vector<std::uint8_t>> draw_patterns(
    const FunctionalConfig& cfg, const NetworkParams& net, RngStream& bits) {
  if (cfg.mode == PatternMode::dhat) {
    return sample_dhat(cfg.N, cfg.L, bits).layers;
  }
  if (cfg.z_points.size() != cfg.L) {
    throw std::invalid_argument(
        "opnorm_functional_sample: dbar mode needs one z point per layer");
  }
  std::vector<std::vector<std::uint8_t>> layers(cfg.L);
  for (std::size_t l = 0; l < cfg.L; ++l) {
    // Only the pattern of layer l at argument z_l is consumed downstream.
    layers[l] = sample_dbar(net, cfg.z_points[l], bits).layers[l];
  }
  return layers;
}

void check_config(const FunctionalConfig& cfg) {
  if (cfg.d < 1 || cfg.N < 1 || cfg.L < 1) {
    throw std::invalid_argument("functional sample: d, N, L must be >= 1");
  }
  if (cfg.l1 < 0 || cfg.l1 > static_cast<int>(cfg.L) || cfg.l2 < -1 ||
      cfg.l2 > static_cast<int>(cfg.L) - 1) {
    throw std::invalid_argument("functional sample: layer range out of bounds");
  }
}

}  // namespace

FunctionalConfig with_shared_z(FunctionalConfig cfg, const Vector& x) {
  cfg.z_points.assign(cfg.L, x);
  return cfg;
}

std::vector<double> opnorm_functional_sample(const FunctionalConfig& cfg,
                                             const Matrix& A,
                                             std::size_t n_trials,
                                             const RngStream& rng) {
  check_config(cfg);
  const std::size_t domain = (cfg.l1 == 0) ? cfg.d : cfg.N;
  if (A.rows != domain) {
    throw std::invalid_argument(
        "opnorm_functional_sample: A row count does not match product domain");
  }
  std::vector<double> samples(n_trials);
  for (std::size_t t = 0; t < n_trials; ++t) {
    RngStream trial = rng.substream(t);
    const NetworkParams net =
        sample_network(cfg.d, cfg.N, cfg.L, cfg.bias_spec, trial);
    RngStream bits = trial.substream(2);
    const auto patterns = draw_patterns(cfg, net, bits);

    Matrix prod = A;
    for (int j = cfg.l1; j <= cfg.l2; ++j) {
      prod = matmul(net.weights[static_cast<std::size_t>(j)], prod);
      const auto& pat = patterns[static_cast<std::size_t>(j)];
      for (std::size_t i = 0; i < prod.rows; ++i) {
        if (!pat[i]) {
          for (std::size_t c = 0; c < prod.cols; ++c) prod.at(i, c) = 0.0;
        }
      }
    }
    samples[t] = operator_norm_2(prod);
  }
  return samples;
}

std::vector<double> final_layer_functional_sample(const FunctionalConfig& cfg,
                                                  std::size_t n_trials,
                                                  const RngStream& rng) {
  check_config(cfg);
  std::vector<double> samples(n_trials);
  for (std::size_t t = 0; t < n_trials; ++t) {
    RngStream trial = rng.substream(t);
    const NetworkParams net =
        sample_network(cfg.d, cfg.N, cfg.L, cfg.bias_spec, trial);
    RngStream bits = trial.substream(2);
    const auto patterns = draw_patterns(cfg, net, bits);

    Vector row = net.weights[cfg.L].data;
    for (int j = static_cast<int>(cfg.L) - 1; j >= cfg.l1; --j) {
      const auto& pat = patterns[static_cast<std::size_t>(j)];
      for (std::size_t i = 0; i < cfg.N; ++i) {
        if (!pat[i]) row[i] = 0.0;
      }
      row = vecmat(row, net.weights[static_cast<std::size_t>(j)]);
    }
    samples[t] = lp_norm(row, Exponent(2.0));
  }
  return samples;
}

double estimate_prob_all_patterns_deterministic(std::size_t d, std::size_t N,
                                                std::size_t L,
                                                const BiasSpec& bias_spec,
                                                std::size_t n_trials,
                                                const RngStream& rng,
                                                const Vector& probe) {
  if (probe.size() != d) {
    throw std::invalid_argument(
        "estimate_prob_all_patterns_deterministic: probe dimension mismatch");
  }
  double sq = 0.0;
  for (double v : probe) sq += v * v;
  if (sq == 0.0) {
    throw std::invalid_argument(
        "estimate_prob_all_patterns_deterministic: probe must be nonzero");
  }
  if (n_trials == 0) {
    throw std::invalid_argument(
        "estimate_prob_all_patterns_deterministic: need at least one trial");
  }
  std::size_t hits = 0;
  for (std::size_t t = 0; t < n_trials; ++t) {
    const NetworkParams net =
        sample_network(d, N, L, bias_spec, rng.substream(t));
    const ForwardTrace trace = forward(net, probe);
    bool deterministic = true;
    for (std::size_t l = 0; l < L && deterministic; ++l) {
      bool layer_alive = false;
      for (std::size_t i = 0; i < N; ++i) {
        if (trace.preactivations[l][i] == 0.0) {
          deterministic = false;
          break;
        }
        if (trace.activations[l][i] != 0.0) layer_alive = true;
      }
      if (!layer_alive) deterministic = false;
    }
    if (deterministic) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(n_trials);
}

}  // namespace relulab
