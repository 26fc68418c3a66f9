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

#include "relulab/network.hpp"

#include <cmath>
#include <stdexcept>

namespace relulab {

BiasSpec BiasSpec::gaussian(double sigma) {
  if (!(sigma > 0.0)) {
    throw std::invalid_argument("BiasSpec::gaussian: sigma must be positive");
  }
  return {Kind::gaussian, sigma};
}

BiasSpec BiasSpec::uniform(double sigma) {
  if (!(sigma > 0.0)) {
    throw std::invalid_argument("BiasSpec::uniform: sigma must be positive");
  }
  return {Kind::uniform, sigma};
}

std::optional<double> BiasSpec::small_ball_constant() const {
  switch (kind) {
    case Kind::zero:
      return std::nullopt;
    case Kind::gaussian:
      // Density peak 1/(sigma sqrt(2 pi)) equals C_tau / 2.
      return 2.0 / (sigma * std::sqrt(2.0 * M_PI));
    case Kind::uniform:
      return 1.0 / sigma;
  }
  return std::nullopt;
}

double BiasSpec::sample(RngStream& rng) const {
  switch (kind) {
    case Kind::zero:
      return 0.0;
    case Kind::gaussian:
      return sigma * rng.next_gaussian();
    case Kind::uniform:
      return sigma * (2.0 * rng.next_unit() - 1.0);
  }
  return 0.0;
}

bool operator==(const BiasSpec& a, const BiasSpec& b) {
  if (a.kind != b.kind) return false;
  return a.is_zero() || a.sigma == b.sigma;
}

void validate_network(const NetworkParams& net) {
  if (net.d < 1 || net.N < 1 || net.L < 1) {
    throw std::invalid_argument("network: d, N, L must all be >= 1");
  }
  if (net.weights.size() != net.L + 1 || net.biases.size() != net.L) {
    throw std::invalid_argument("network: wrong number of weight/bias layers");
  }
  for (std::size_t l = 0; l <= net.L; ++l) {
    const std::size_t want_rows = (l == net.L) ? 1 : net.N;
    const std::size_t want_cols = (l == 0) ? net.d : net.N;
    if (net.weights[l].rows != want_rows || net.weights[l].cols != want_cols) {
      throw std::invalid_argument("network: weight shape mismatch at layer " +
                                  std::to_string(l));
    }
    if (!all_finite(net.weights[l])) {
      throw std::invalid_argument("network: non-finite weight entries");
    }
  }
  for (std::size_t l = 0; l < net.L; ++l) {
    if (net.biases[l].size() != net.N) {
      throw std::invalid_argument("network: bias length mismatch at layer " +
                                  std::to_string(l));
    }
    if (!all_finite(net.biases[l])) {
      throw std::invalid_argument("network: non-finite bias entries");
    }
  }
  if (net.weight_variances.size() != net.L + 1) {
    throw std::invalid_argument("network: weight variance record incomplete");
  }
}

NetworkParams make_network(std::size_t d, std::size_t N, std::size_t L,
                           std::vector<Matrix> weights,
                           std::vector<Vector> biases, double output_bias,
                           BiasSpec bias_spec) {
  NetworkParams net;
  net.d = d;
  net.N = N;
  net.L = L;
  net.weights = std::move(weights);
  net.biases = std::move(biases);
  net.output_bias = output_bias;
  net.bias_spec = bias_spec;
  net.weight_variances.assign(L + 1, 2.0 / static_cast<double>(N));
  net.weight_variances[L] = 1.0;
  validate_network(net);
  return net;
}

NetworkParams sample_network(std::size_t d, std::size_t N, std::size_t L,
                             const BiasSpec& bias_spec, const RngStream& rng) {
  if (d < 1 || N < 1 || L < 1) {
    throw std::invalid_argument("sample_network: d, N, L must all be >= 1");
  }
  NetworkParams net;
  net.d = d;
  net.N = N;
  net.L = L;
  net.bias_spec = bias_spec;
  net.seed = {rng.master_seed(), rng.stream_index(), true};
  net.weight_variances.assign(L + 1, 2.0 / static_cast<double>(N));
  net.weight_variances[L] = 1.0;

  RngStream weight_rng = rng.substream(0);
  net.weights.reserve(L + 1);
  for (std::size_t l = 0; l <= L; ++l) {
    const std::size_t rows = (l == L) ? 1 : N;
    const std::size_t cols = (l == 0) ? d : N;
    net.weights.push_back(
        gaussian_matrix(rows, cols, net.weight_variances[l], weight_rng));
  }

  RngStream bias_rng = rng.substream(1);
  net.biases.assign(L, Vector(N, 0.0));
  for (std::size_t l = 0; l < L; ++l) {
    for (std::size_t i = 0; i < N; ++i) {
      net.biases[l][i] = bias_spec.sample(bias_rng);
    }
  }
  net.output_bias = bias_spec.sample(bias_rng);
  return net;
}

ForwardTrace forward(const NetworkParams& net, const Vector& x) {
  if (x.size() != net.d) {
    throw std::invalid_argument("forward: input dimension mismatch");
  }
  ForwardTrace trace;
  trace.input = x;
  trace.preactivations.reserve(net.L);
  trace.activations.reserve(net.L);
  trace.patterns.reserve(net.L);

  const Vector* prev = &x;
  for (std::size_t l = 0; l < net.L; ++l) {
    Vector z = matvec(net.weights[l], *prev);
    for (std::size_t i = 0; i < net.N; ++i) z[i] += net.biases[l][i];
    Vector phi(net.N);
    std::vector<std::uint8_t> pat(net.N);
    for (std::size_t i = 0; i < net.N; ++i) {
      const bool active = z[i] > 0.0;  // strict: z == 0 maps to 0
      pat[i] = active ? 1 : 0;
      phi[i] = active ? z[i] : 0.0;
    }
    trace.preactivations.push_back(std::move(z));
    trace.activations.push_back(std::move(phi));
    trace.patterns.push_back(std::move(pat));
    prev = &trace.activations.back();
  }
  trace.output = dot(net.weights[net.L].data, *prev) + net.output_bias;
  return trace;
}

Vector formal_gradient(const NetworkParams& net, const ForwardTrace& trace) {
  if (trace.patterns.size() != net.L || trace.input.size() != net.d) {
    throw std::invalid_argument("formal_gradient: trace does not match network");
  }
  // Row vector W^(L), then right-multiplied by D^(j) W^(j) down to layer 0.
  Vector row = net.weights[net.L].data;
  for (std::size_t l = net.L; l-- > 0;) {
    for (std::size_t i = 0; i < net.N; ++i) {
      if (!trace.patterns[l][i]) row[i] = 0.0;
    }
    row = vecmat(row, net.weights[l]);
  }
  return row;
}

Vector formal_gradient_at(const NetworkParams& net, const Vector& x) {
  return formal_gradient(net, forward(net, x));
}

Matrix batch_formal_gradients(const NetworkParams& net, const Matrix& points) {
  if (points.cols != net.d) {
    throw std::invalid_argument("batch_formal_gradients: dimension mismatch");
  }
  const std::size_t B = points.rows;

  // Forward sweep, keeping only the activation patterns.
  std::vector<std::vector<std::uint8_t>> masks(net.L);
  Matrix act = points;
  for (std::size_t l = 0; l < net.L; ++l) {
    Matrix z = matmul(act, transpose(net.weights[l]));  // B x N
    masks[l].assign(B * net.N, 0);
    for (std::size_t s = 0; s < B; ++s) {
      for (std::size_t i = 0; i < net.N; ++i) {
        const double v = z.at(s, i) + net.biases[l][i];
        if (v > 0.0) {
          masks[l][s * net.N + i] = 1;
          z.at(s, i) = v;
        } else {
          z.at(s, i) = 0.0;
        }
      }
    }
    act = std::move(z);
  }

  // Backward chain: rows start as W^(L) masked by the top pattern.
  Matrix rows(B, net.N);
  const Vector& top = net.weights[net.L].data;
  for (std::size_t s = 0; s < B; ++s) {
    for (std::size_t i = 0; i < net.N; ++i) {
      rows.at(s, i) = masks[net.L - 1][s * net.N + i] ? top[i] : 0.0;
    }
  }
  for (std::size_t l = net.L - 1; l >= 1; --l) {
    rows = matmul(rows, net.weights[l]);  // B x N
    for (std::size_t s = 0; s < B; ++s) {
      for (std::size_t i = 0; i < net.N; ++i) {
        if (!masks[l - 1][s * net.N + i]) rows.at(s, i) = 0.0;
      }
    }
  }
  return matmul(rows, net.weights[0]);  // B x d
}

namespace {

void check_jacobian_range(const NetworkParams& net, int l1, int l2) {
  if (l1 < 0 || l1 > static_cast<int>(net.L) || l2 < -1 ||
      l2 > static_cast<int>(net.L) - 1) {
    throw std::invalid_argument("partial_jacobian: layer index out of range");
  }
}

const std::vector<std::uint8_t>& pattern_for_layer(
    const NetworkParams& net, std::span<const ForwardTrace> traces, int layer) {
  const auto& trace = traces.size() == 1 ? traces[0]
                                         : traces[static_cast<std::size_t>(layer)];
  if (trace.patterns.size() != net.L) {
    throw std::invalid_argument("partial_jacobian: trace does not match network");
  }
  return trace.patterns[static_cast<std::size_t>(layer)];
}

Matrix partial_jacobian_impl(const NetworkParams& net,
                             std::span<const ForwardTrace> traces, int l1,
                             int l2) {
  check_jacobian_range(net, l1, l2);
  const std::size_t domain = (l1 == 0) ? net.d : net.N;
  Matrix result = Matrix::identity(domain);
  for (int j = l1; j <= l2; ++j) {
    Matrix step = matmul(net.weights[static_cast<std::size_t>(j)], result);
    const auto& pat = pattern_for_layer(net, traces, j);
    for (std::size_t i = 0; i < step.rows; ++i) {
      if (!pat[i]) {
        for (std::size_t c = 0; c < step.cols; ++c) step.at(i, c) = 0.0;
      }
    }
    result = std::move(step);
  }
  return result;
}

}  // namespace

Matrix partial_jacobian(const NetworkParams& net, const ForwardTrace& trace,
                        int l1, int l2) {
  return partial_jacobian_impl(net, std::span<const ForwardTrace>(&trace, 1),
                               l1, l2);
}

Matrix partial_jacobian(const NetworkParams& net,
                        std::span<const ForwardTrace> traces, int l1, int l2) {
  if (traces.size() != net.L) {
    throw std::invalid_argument(
        "partial_jacobian: need one trace per layer index");
  }
  return partial_jacobian_impl(net, traces, l1, l2);
}

NetworkParams zero_bias_counterpart(const NetworkParams& net) {
  NetworkParams out = net;
  for (auto& b : out.biases) b.assign(out.N, 0.0);
  out.output_bias = 0.0;
  out.bias_spec = BiasSpec::zero();
  return out;
}

FiniteDifferenceResult finite_difference_gradient(const NetworkParams& net,
                                                  const Vector& x, double h) {
  if (!(h > 0.0)) {
    throw std::invalid_argument("finite_difference_gradient: h must be > 0");
  }
  const ForwardTrace base = forward(net, x);

  FiniteDifferenceResult result;
  result.gradient.resize(net.d);
  for (const auto& z : base.preactivations) {
    for (double zi : z) {
      if (std::fabs(zi) < 10.0 * h) result.straddles_boundary = true;
    }
  }

  Vector probe = x;
  for (std::size_t i = 0; i < net.d; ++i) {
    probe[i] = x[i] + h;
    const ForwardTrace plus = forward(net, probe);
    probe[i] = x[i] - h;
    const ForwardTrace minus = forward(net, probe);
    probe[i] = x[i];
    result.gradient[i] = (plus.output - minus.output) / (2.0 * h);
    if (plus.patterns != base.patterns || minus.patterns != base.patterns) {
      result.straddles_boundary = true;
    }
  }
  return result;
}

double telescoping_residual(const NetworkParams& net, const Vector& x,
                            const Vector& y, int l1, int l2) {
  check_jacobian_range(net, l1, l2);
  const ForwardTrace tx = forward(net, x);
  const ForwardTrace ty = forward(net, y);

  Matrix lhs = partial_jacobian(net, tx, l1, l2) -
               partial_jacobian(net, ty, l1, l2);
  for (int j = l1; j <= l2; ++j) {
    const Matrix right = partial_jacobian(net, ty, l1, j - 1);
    Matrix mid = matmul(net.weights[static_cast<std::size_t>(j)], right);
    const auto& px = tx.patterns[static_cast<std::size_t>(j)];
    const auto& py = ty.patterns[static_cast<std::size_t>(j)];
    for (std::size_t i = 0; i < mid.rows; ++i) {
      const double diff = static_cast<double>(px[i]) - static_cast<double>(py[i]);
      for (std::size_t c = 0; c < mid.cols; ++c) mid.at(i, c) *= diff;
    }
    const Matrix term = matmul(partial_jacobian(net, tx, j + 1, l2), mid);
    lhs = lhs - term;
  }
  return frobenius_norm(lhs);
}

double telescoping_term_scale(const NetworkParams& net, const Vector& x,
                              const Vector& y, int l1, int l2) {
  check_jacobian_range(net, l1, l2);
  const ForwardTrace tx = forward(net, x);
  const ForwardTrace ty = forward(net, y);
  double scale = frobenius_norm(partial_jacobian(net, tx, l1, l2)) +
                 frobenius_norm(partial_jacobian(net, ty, l1, l2));
  for (int j = l1; j <= l2; ++j) {
    const Matrix right = partial_jacobian(net, ty, l1, j - 1);
    Matrix mid = matmul(net.weights[static_cast<std::size_t>(j)], right);
    const auto& px = tx.patterns[static_cast<std::size_t>(j)];
    const auto& py = ty.patterns[static_cast<std::size_t>(j)];
    for (std::size_t i = 0; i < mid.rows; ++i) {
      const double diff = static_cast<double>(px[i]) - static_cast<double>(py[i]);
      for (std::size_t c = 0; c < mid.cols; ++c) mid.at(i, c) *= diff;
    }
    scale += frobenius_norm(matmul(partial_jacobian(net, tx, j + 1, l2), mid));
  }
  return scale;
}

}  // namespace relulab
