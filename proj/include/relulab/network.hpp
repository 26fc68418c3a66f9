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
#include <optional>
#include <span>
#include <vector>

#include "relulab/matrix.hpp"
#include "relulab/rng.hpp"

namespace relulab {

/// Bias distribution of a random ReLU network. Gaussian and uniform kinds are
/// symmetric about zero; both admit a small-ball constant, zero biases do not.
struct BiasSpec {
  enum class Kind { zero, gaussian, uniform };

  Kind kind = Kind::zero;
  double sigma = 0.0;  // std dev (gaussian) or half-width (uniform)

  static BiasSpec zero() { return {}; }
  static BiasSpec gaussian(double sigma);
  static BiasSpec uniform(double sigma);

  bool is_zero() const { return kind == Kind::zero; }

  /// C_tau with P(b in (t-eps, t+eps)) <= C_tau * eps; density bound C_tau/2.
  /// Empty for the zero kind.
  std::optional<double> small_ball_constant() const;

  double sample(RngStream& rng) const;
};

bool operator==(const BiasSpec& a, const BiasSpec& b);

struct SeedRecord {
  std::uint64_t master = 0;
  std::uint64_t stream = 0;
  bool sampled = false;  // false for hand-built or edited parameter sets
};

/// Full parameter set of a ReLU network R^d -> R with L hidden layers of
/// width N: weights W^(0) (N x d), W^(1..L-1) (N x N), W^(L) (1 x N), hidden
/// biases b^(0..L-1) in R^N and the scalar output bias.
struct NetworkParams {
  std::size_t d = 0;
  std::size_t N = 0;
  std::size_t L = 0;
  std::vector<Matrix> weights;        // L + 1 matrices
  std::vector<Vector> biases;         // L vectors of length N
  double output_bias = 0.0;           // b^(L)
  std::vector<double> weight_variances;  // recorded at sampling time
  BiasSpec bias_spec;
  SeedRecord seed;
};

/// Validates shape consistency; throws invalid_argument on mismatch.
void validate_network(const NetworkParams& net);

/// Hand-built network from explicit parameters (shape-checked).
NetworkParams make_network(std::size_t d, std::size_t N, std::size_t L,
                           std::vector<Matrix> weights,
                           std::vector<Vector> biases, double output_bias,
                           BiasSpec bias_spec);

/// Random network: hidden weights i.i.d. N(0, 2/N), output weights N(0, 1),
/// biases per `bias_spec`, everything jointly independent. Weights come from
/// substream 0 of `rng` and biases from substream 1, so two specs that differ
/// only in their biases share identical weights under the same stream.
NetworkParams sample_network(std::size_t d, std::size_t N, std::size_t L,
                             const BiasSpec& bias_spec, const RngStream& rng);

/// Per-layer record of one forward pass: preactivations z^(l), activations
/// Phi^(l), and the strict-positivity patterns D^(l) (1 iff z > 0).
struct ForwardTrace {
  Vector input;
  std::vector<Vector> preactivations;       // L vectors of length N
  std::vector<Vector> activations;          // L vectors of length N
  std::vector<std::vector<std::uint8_t>> patterns;  // L bit vectors
  double output = 0.0;
};

ForwardTrace forward(const NetworkParams& net, const Vector& x);

/// Formal gradient (W^(L) prod_{j=L-1..0} D^(j)(x) W^(j))^T as a d-vector.
Vector formal_gradient(const NetworkParams& net, const ForwardTrace& trace);

/// Gradient straight from an input (forward pass included).
Vector formal_gradient_at(const NetworkParams& net, const Vector& x);

/// Formal gradients for a batch of inputs: row i of `points` is an input,
/// row i of the result is its gradient. Matches formal_gradient_at exactly;
/// exists because sampled suprema evaluate many points per network.
Matrix batch_formal_gradients(const NetworkParams& net, const Matrix& points);

/// Reverse-order product prod_{j=l2..l1} D^(j) W^(j); identity of the
/// appropriate dimension (d if l1 == 0 else N) when l2 < l1. Valid indices:
/// 0 <= l1 <= L, -1 <= l2 <= L-1.
Matrix partial_jacobian(const NetworkParams& net, const ForwardTrace& trace,
                        int l1, int l2);

/// Same product with one trace per layer index, so the D-matrix arguments may
/// vary from layer to layer; traces.size() must be L.
Matrix partial_jacobian(const NetworkParams& net,
                        std::span<const ForwardTrace> traces, int l1, int l2);

/// Same network with every bias set to zero.
NetworkParams zero_bias_counterpart(const NetworkParams& net);

struct FiniteDifferenceResult {
  Vector gradient;
  /// Set when the stencil may straddle an activation boundary: some
  /// preactivation at x satisfies |z| < 10h, or a perturbed point's pattern
  /// differs from the pattern at x.
  bool straddles_boundary = false;
};

/// Central differences (Phi(x + h e_i) - Phi(x - h e_i)) / (2h).
FiniteDifferenceResult finite_difference_gradient(const NetworkParams& net,
                                                  const Vector& x,
                                                  double h = 1e-6);

/// Frobenius norm of the defect of the layerwise difference decomposition
///   [J(x) - J(y)] - sum_j J^(j+1 -> l2)(x) (D^(j)(x) - D^(j)(y)) W^(j) J^(l1 -> j-1)(y)
/// with J = partial Jacobian over [l1, l2]; identically zero in exact
/// arithmetic for every layer range.
double telescoping_residual(const NetworkParams& net, const Vector& x,
                            const Vector& y, int l1, int l2);

/// Sum of the Frobenius norms of the decomposition's terms at the same
/// arguments; scale reference for the residual.
double telescoping_term_scale(const NetworkParams& net, const Vector& x,
                              const Vector& y, int l1, int l2);

}  // namespace relulab
