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

#pragma once

#include <cstdint>
#include <vector>

#include "relulab/matrix.hpp"
#include "relulab/network.hpp"
#include "relulab/rng.hpp"

namespace relulab {

/// Per-layer activation bits where strictly positive preactivations give 1,
/// strictly negative give 0, and exact zeros are filled by fair coin flips.
/// Agrees with the deterministic pattern wherever the preactivation is nonzero.
struct RandomizedPattern {
  std::vector<std::vector<std::uint8_t>> layers;
};

/// Fully independent per-layer Unif{0,1} bits.
struct SurrogatePattern {
  std::vector<std::vector<std::uint8_t>> layers;
};

RandomizedPattern sample_dbar(const NetworkParams& net, const Vector& x,
                              RngStream& rng);

SurrogatePattern sample_dhat(std::size_t N, std::size_t L, RngStream& rng);

/// Replaces b^(layer)_neuron so that the preactivation of that neuron is
/// exactly zero at input x; test hook for the coin-flip branch.
NetworkParams force_zero_preactivation(NetworkParams net, std::size_t layer,
                                       std::size_t neuron, const Vector& x);

enum class PatternMode { dbar, dhat };

/// Configuration for the pattern-weighted product functionals: fresh weights
/// and patterns are drawn per trial for a product over layers [l1, l2]. In
/// dbar mode the pattern at layer i is evaluated at z_points[i].
struct FunctionalConfig {
  std::size_t d = 0;
  std::size_t N = 0;
  std::size_t L = 0;
  BiasSpec bias_spec;
  int l1 = 0;
  int l2 = 0;
  PatternMode mode = PatternMode::dbar;
  std::vector<Vector> z_points;  // one per layer 0..L-1 (dbar mode)
};

/// Fills z_points with L copies of x.
FunctionalConfig with_shared_z(FunctionalConfig cfg, const Vector& x);

/// n_trials draws of || [prod_{i=l2..l1} D^(i) W^(i)] A ||_{2->2}, each from a
/// fresh network and fresh patterns. A must have (d if l1 == 0 else N) rows
/// and may not depend on the trial's own randomness. Trial t consumes
/// substream t of rng (0 = weights, 1 = biases, 2 = pattern bits inside).
std::vector<double> opnorm_functional_sample(const FunctionalConfig& cfg,
                                             const Matrix& A,
                                             std::size_t n_trials,
                                             const RngStream& rng);

/// n_trials draws of the l2 norm of the row W^(L) [prod_{i=L-1..l1} D^(i) W^(i)]
/// under the same trial layout.
std::vector<double> final_layer_functional_sample(const FunctionalConfig& cfg,
                                                  std::size_t n_trials,
                                                  const RngStream& rng);

/// Fraction of fresh-network trials in which every preactivation at probe x is
/// nonzero and every layer output is nonzero, i.e. the randomized pattern is
/// forced to coincide with the deterministic one.
double estimate_prob_all_patterns_deterministic(std::size_t d, std::size_t N,
                                                std::size_t L,
                                                const BiasSpec& bias_spec,
                                                std::size_t n_trials,
                                                const RngStream& rng,
                                                const Vector& probe);

}  // namespace relulab
