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

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "relulab/network.hpp"
#include "relulab/norms.hpp"
#include "relulab/stats.hpp"

namespace relulab {

/// Requested method cannot apply to the given network shape or bias kind.
class UnsupportedConfigError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Enumeration grew past its safety cap.
class ResourceLimitError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class EstimateKind { lower, upper, exact };

struct EstimateBudget {
  std::size_t samples = 0;
  std::size_t hops = 0;
  std::size_t grid = 0;    // circle oracle coarse grid
  std::size_t pieces = 0;  // 1-D oracle linear pieces
};

/// One Lipschitz bound: lower bounds come from sampled gradients, upper
/// bounds from certified products, exact values from small-scale oracles.
struct LipEstimate {
  double value = 0.0;
  Exponent p = Exponent(2.0);
  EstimateKind kind = EstimateKind::lower;
  std::string method;
  EstimateBudget budget;
  SeedRecord seed;
};

std::string estimate_to_json(const LipEstimate& est);

struct GradNormSample {
  Vector x;
  Exponent p_conjugate = Exponent(2.0);
  double value = 0.0;
};

/// ||grad Phi(x)||_{p'} with 1/p + 1/p' = 1; x must be nonzero.
GradNormSample pointwise_grad_norm(const NetworkParams& net, const Vector& x,
                                   const Exponent& p);

struct SampleDomain {
  enum class Kind { sphere, ball };
  Kind kind = Kind::sphere;
  double radius = 1.0;

  static SampleDomain sphere(double radius = 1.0) {
    return {Kind::sphere, radius};
  }
  static SampleDomain ball(double radius) { return {Kind::ball, radius}; }
};

/// Lower bound: max of ||grad Phi(x)||_{p'} over sampled points, plus an
/// optional basin-hopping refinement (Gaussian perturbation of the incumbent,
/// keep on improvement). Sample i comes from substream(0).substream(i), so
/// results are nondecreasing in n_samples under a fixed stream; hops draw
/// from substream(1).
LipEstimate sampled_sup_grad_norm(const NetworkParams& net, const Exponent& p,
                                  std::size_t n_samples,
                                  const SampleDomain& domain,
                                  const RngStream& rng, std::size_t n_hops = 0);

/// Max over sphere samples of <grad Phi(x), nu>; zero-bias networks only.
double directional_sup(const NetworkParams& net, const Vector& nu,
                       std::size_t n_samples, const RngStream& rng,
                       std::size_t n_hops = 0);

/// Certified upper bound prod_l ||W^(l)||_{2->2}, carried to the requested p
/// by the standard norm comparisons on R^d.
LipEstimate layerwise_upper_bound(const NetworkParams& net, const Exponent& p);

/// Exact Lipschitz constant of a d=1 network by breakpoint propagation.
/// Zero-bias networks enumerate [-1, 1] (gradient scale invariance covers the
/// line); networks with biases need an explicit interval. Piece cap 10^6.
LipEstimate exact_lip_1d(
    const NetworkParams& net,
    std::optional<std::pair<double, double>> interval = std::nullopt);

/// Exact lip_p of a zero-bias d=2 network: scan the circle on a coarse angle
/// grid, bisect every activation-pattern change to angle_tol, then take the
/// max gradient norm over constant-pattern arcs. Exact provided no arc is
/// narrower than the coarse grid spacing (grid size is recorded).
LipEstimate exact_lip_circle(const NetworkParams& net, const Exponent& p,
                             double angle_tol = 1e-12,
                             std::size_t coarse_grid = 65536);

/// ||Phi^(l)(x)||_2 / ||x||_2 for a zero-bias network, l in {0..L-1}.
double isometry_ratio(const NetworkParams& net, const Vector& x,
                      std::size_t l);

/// lambda' with |b^(l)_i| <= lambda' sqrt(2)/sqrt(N) over the hidden layers,
/// taken from the realized biases.
double bias_envelope_lambda_prime(const NetworkParams& net);

/// Radius 3^L * lambda' * N/(dL) * ln^{-1/2}(N/d) beyond which the gradient
/// tracks the zero-bias counterpart; needs N > d. Zero-bias networks get 1.
double grad_diff_radius(const NetworkParams& net);

/// Summary of ||grad Phi(x) - grad Phi~(x)||_2 over points sampled uniformly
/// on the sphere of radius radius_scale * grad_diff_radius(net), where Phi~ is
/// the zero-bias counterpart.
SummaryStats grad_diff_large_norm(const NetworkParams& net,
                                  std::size_t n_samples, const RngStream& rng,
                                  double radius_scale = 1.0);

}  // namespace relulab
