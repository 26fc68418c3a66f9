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

#include "relulab/lipschitz.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "json.hpp"

namespace relulab {

namespace {

constexpr std::size_t kBatch = 256;
constexpr std::size_t kPieceCap = 1000000;

Vector domain_point(const NetworkParams& net, const SampleDomain& domain,
                    RngStream& rng) {
  Vector x = rng.next_unit_vector(net.d);
  double r = domain.radius;
  if (domain.kind == SampleDomain::Kind::ball) {
    r *= std::pow(rng.next_unit(), 1.0 / static_cast<double>(net.d));
  }
  return scale(r, x);
}

// Gaussian step from the incumbent, renormalized to the search domain.
Vector hop_proposal(const Vector& x, const SampleDomain& domain, double gamma,
                    RngStream& rng) {
  const std::size_t d = x.size();
  Vector g(d);
  for (double& v : g) v = rng.next_gaussian();
  const double step = gamma * domain.radius / std::sqrt(static_cast<double>(d));
  Vector y = axpy(step, g, x);
  const double n = lp_norm(y, Exponent(2.0));
  if (n == 0.0) return x;
  if (domain.kind == SampleDomain::Kind::sphere || n > domain.radius) {
    y = scale(domain.radius / n, y);
  }
  return y;
}

constexpr double kHopScales[] = {0.5, 0.2, 0.08, 0.03};

}  // namespace

std::string estimate_to_json(const LipEstimate& est) {
  nlohmann::json j;
  j["value"] = est.value;
  j["p"] = est.p.str();
  switch (est.kind) {
    case EstimateKind::lower:
      j["kind"] = "lower";
      break;
    case EstimateKind::upper:
      j["kind"] = "upper";
      break;
    case EstimateKind::exact:
      j["kind"] = "exact";
      break;
  }
  j["method"] = est.method;
  j["budget"] = {{"samples", est.budget.samples},
                 {"hops", est.budget.hops},
                 {"grid", est.budget.grid},
                 {"pieces", est.budget.pieces}};
  j["seed"] = {{"master", est.seed.master},
               {"stream", est.seed.stream},
               {"sampled", est.seed.sampled}};
  return j.dump(2);
}

GradNormSample pointwise_grad_norm(const NetworkParams& net, const Vector& x,
                                   const Exponent& p) {
  if (lp_norm(x, Exponent(2.0)) == 0.0) {
    throw std::invalid_argument("pointwise_grad_norm: x must be nonzero");
  }
  GradNormSample sample;
  sample.x = x;
  sample.p_conjugate = p.conjugate();
  sample.value = lp_norm(formal_gradient_at(net, x), sample.p_conjugate);
  return sample;
}

LipEstimate sampled_sup_grad_norm(const NetworkParams& net, const Exponent& p,
                                  std::size_t n_samples,
                                  const SampleDomain& domain,
                                  const RngStream& rng, std::size_t n_hops) {
  if (n_samples < 1) {
    throw std::invalid_argument("sampled_sup_grad_norm: need n_samples >= 1");
  }
  const Exponent q = p.conjugate();
  const RngStream sample_root = rng.substream(0);

  double best = -1.0;
  Vector best_x;
  for (std::size_t start = 0; start < n_samples; start += kBatch) {
    const std::size_t count = std::min(kBatch, n_samples - start);
    Matrix points(count, net.d);
    for (std::size_t s = 0; s < count; ++s) {
      RngStream point_rng = sample_root.substream(start + s);
      const Vector x = domain_point(net, domain, point_rng);
      for (std::size_t j = 0; j < net.d; ++j) points.at(s, j) = x[j];
    }
    const Matrix grads = batch_formal_gradients(net, points);
    for (std::size_t s = 0; s < count; ++s) {
      Vector g(net.d);
      for (std::size_t j = 0; j < net.d; ++j) g[j] = grads.at(s, j);
      const double v = lp_norm(g, q);
      if (v > best) {
        best = v;
        best_x.assign(points.data.begin() + s * net.d,
                      points.data.begin() + (s + 1) * net.d);
      }
    }
  }

  RngStream hop_rng = rng.substream(1);
  for (std::size_t h = 0; h < n_hops; ++h) {
    const double gamma = kHopScales[h % std::size(kHopScales)];
    const Vector y = hop_proposal(best_x, domain, gamma, hop_rng);
    const double v = lp_norm(formal_gradient_at(net, y), q);
    if (v > best) {
      best = v;
      best_x = y;
    }
  }

  LipEstimate est;
  est.value = best;
  est.p = p;
  est.kind = EstimateKind::lower;
  est.method = "sampled_sup";
  est.budget.samples = n_samples;
  est.budget.hops = n_hops;
  est.seed = {rng.master_seed(), rng.stream_index(), true};
  return est;
}

double directional_sup(const NetworkParams& net, const Vector& nu,
                       std::size_t n_samples, const RngStream& rng,
                       std::size_t n_hops) {
  if (!net.bias_spec.is_zero()) {
    throw UnsupportedConfigError(
        "directional_sup: only zero-bias networks restrict to the sphere");
  }
  if (nu.size() != net.d) {
    throw std::invalid_argument("directional_sup: direction dimension mismatch");
  }
  if (std::fabs(lp_norm(nu, Exponent(2.0)) - 1.0) > 1e-9) {
    throw std::invalid_argument("directional_sup: nu must be a unit vector");
  }
  if (n_samples < 1) {
    throw std::invalid_argument("directional_sup: need n_samples >= 1");
  }

  const SampleDomain domain = SampleDomain::sphere();
  const RngStream sample_root = rng.substream(0);
  double best = -std::numeric_limits<double>::infinity();
  Vector best_x;
  for (std::size_t start = 0; start < n_samples; start += kBatch) {
    const std::size_t count = std::min(kBatch, n_samples - start);
    Matrix points(count, net.d);
    for (std::size_t s = 0; s < count; ++s) {
      RngStream point_rng = sample_root.substream(start + s);
      const Vector x = point_rng.next_unit_vector(net.d);
      for (std::size_t j = 0; j < net.d; ++j) points.at(s, j) = x[j];
    }
    const Matrix grads = batch_formal_gradients(net, points);
    for (std::size_t s = 0; s < count; ++s) {
      double v = 0.0;
      for (std::size_t j = 0; j < net.d; ++j) v += grads.at(s, j) * nu[j];
      if (v > best) {
        best = v;
        best_x.assign(points.data.begin() + s * net.d,
                      points.data.begin() + (s + 1) * net.d);
      }
    }
  }

  RngStream hop_rng = rng.substream(1);
  for (std::size_t h = 0; h < n_hops; ++h) {
    const double gamma = kHopScales[h % std::size(kHopScales)];
    const Vector y = hop_proposal(best_x, domain, gamma, hop_rng);
    const double v = dot(formal_gradient_at(net, y), nu);
    if (v > best) {
      best = v;
      best_x = y;
    }
  }
  return best;
}

LipEstimate layerwise_upper_bound(const NetworkParams& net, const Exponent& p) {
  double product = 1.0;
  for (const Matrix& w : net.weights) {
    product *= operator_norm_2(w);
  }
  double value = product;
  if (!p.is_infinite() && p.value() <= 2.0) {
    // p in [1,2]: the gradient p'-norm is dominated by its 2-norm.
  } else {
    // p in (2,inf]: ||g||_{p'} <= d^{1/2 - 1/p} ||g||_2.
    const double inv_p = p.is_infinite() ? 0.0 : 1.0 / p.value();
    value *= std::pow(static_cast<double>(net.d), 0.5 - inv_p);
  }
  LipEstimate est;
  est.value = value;
  est.p = p;
  est.kind = EstimateKind::upper;
  est.method = "layerwise_product";
  est.seed = net.seed;
  return est;
}

namespace {

struct AffinePiece {
  double lo = 0.0;
  double hi = 0.0;
  Vector offset;  // value on the piece: offset + slope * x
  Vector slope;
};

}  // namespace

LipEstimate exact_lip_1d(const NetworkParams& net,
                         std::optional<std::pair<double, double>> interval) {
  if (net.d != 1) {
    throw UnsupportedConfigError("exact_lip_1d: network must have d = 1");
  }
  double a, b;
  if (interval) {
    a = interval->first;
    b = interval->second;
    if (!(a < b)) {
      throw std::invalid_argument("exact_lip_1d: empty interval");
    }
  } else if (net.bias_spec.is_zero()) {
    // Scale invariance of the zero-bias gradient: both rays are covered.
    a = -1.0;
    b = 1.0;
  } else {
    throw std::invalid_argument(
        "exact_lip_1d: networks with biases need an explicit interval");
  }

  std::vector<AffinePiece> pieces{{a, b, Vector{0.0}, Vector{1.0}}};
  for (std::size_t l = 0; l < net.L; ++l) {
    std::vector<AffinePiece> next;
    for (const AffinePiece& piece : pieces) {
      Vector off = matvec(net.weights[l], piece.offset);
      Vector slp = matvec(net.weights[l], piece.slope);
      for (std::size_t i = 0; i < net.N; ++i) off[i] += net.biases[l][i];

      std::vector<double> knots{piece.lo, piece.hi};
      for (std::size_t i = 0; i < net.N; ++i) {
        if (slp[i] != 0.0) {
          const double root = -off[i] / slp[i];
          if (root > piece.lo && root < piece.hi) knots.push_back(root);
        }
      }
      std::sort(knots.begin(), knots.end());
      knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

      for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
        const double mid = 0.5 * (knots[k] + knots[k + 1]);
        AffinePiece sub{knots[k], knots[k + 1], off, slp};
        for (std::size_t i = 0; i < net.N; ++i) {
          if (!(off[i] + slp[i] * mid > 0.0)) {
            sub.offset[i] = 0.0;
            sub.slope[i] = 0.0;
          }
        }
        next.push_back(std::move(sub));
        if (next.size() > kPieceCap) {
          throw ResourceLimitError(
              "exact_lip_1d: more than 10^6 linear pieces");
        }
      }
    }
    pieces = std::move(next);
  }

  double lip = 0.0;
  for (const AffinePiece& piece : pieces) {
    lip = std::max(lip, std::fabs(dot(net.weights[net.L].data, piece.slope)));
  }

  LipEstimate est;
  est.value = lip;
  est.p = Exponent(2.0);  // all lp coincide for scalar inputs
  est.kind = EstimateKind::exact;
  est.method = "breakpoint_propagation";
  est.budget.pieces = pieces.size();
  est.seed = net.seed;
  return est;
}

namespace {

std::vector<std::uint8_t> circle_signature(const NetworkParams& net,
                                           double theta) {
  const ForwardTrace trace =
      forward(net, Vector{std::cos(theta), std::sin(theta)});
  std::vector<std::uint8_t> sig;
  sig.reserve(net.L * net.N);
  for (const auto& pat : trace.patterns) {
    sig.insert(sig.end(), pat.begin(), pat.end());
  }
  return sig;
}

}  // namespace

LipEstimate exact_lip_circle(const NetworkParams& net, const Exponent& p,
                             double angle_tol, std::size_t coarse_grid) {
  if (net.d != 2 || !net.bias_spec.is_zero()) {
    throw UnsupportedConfigError(
        "exact_lip_circle: needs a zero-bias network with d = 2");
  }
  if (coarse_grid < 4 || !(angle_tol > 0.0)) {
    throw std::invalid_argument("exact_lip_circle: bad scan parameters");
  }
  const Exponent q = p.conjugate();
  const double two_pi = 2.0 * M_PI;
  const double step = two_pi / static_cast<double>(coarse_grid);

  std::vector<double> boundaries;
  std::vector<std::uint8_t> sig_lo = circle_signature(net, 0.0);
  const std::vector<std::uint8_t> sig_first = sig_lo;
  for (std::size_t k = 0; k < coarse_grid; ++k) {
    const double hi_angle = static_cast<double>(k + 1) * step;
    std::vector<std::uint8_t> sig_hi = (k + 1 == coarse_grid)
                                           ? sig_first
                                           : circle_signature(net, hi_angle);
    if (sig_hi != sig_lo) {
      double lo = static_cast<double>(k) * step;
      double hi = hi_angle;
      while (hi - lo > angle_tol) {
        const double mid = 0.5 * (lo + hi);
        if (circle_signature(net, mid) == sig_lo) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      boundaries.push_back(0.5 * (lo + hi));
    }
    sig_lo = std::move(sig_hi);
  }

  double lip = 0.0;
  std::size_t arcs = 0;
  auto eval_at = [&](double theta) {
    const Vector g =
        formal_gradient_at(net, Vector{std::cos(theta), std::sin(theta)});
    lip = std::max(lip, lp_norm(g, q));
    ++arcs;
  };
  if (boundaries.empty()) {
    eval_at(0.0);
  } else {
    for (std::size_t i = 0; i < boundaries.size(); ++i) {
      const double lo = boundaries[i];
      const double hi = (i + 1 < boundaries.size()) ? boundaries[i + 1]
                                                    : boundaries[0] + two_pi;
      eval_at(0.5 * (lo + hi));
    }
  }

  LipEstimate est;
  est.value = lip;
  est.p = p;
  est.kind = EstimateKind::exact;
  est.method = "circle_scan";
  est.budget.grid = coarse_grid;
  est.budget.samples = arcs;
  est.seed = net.seed;
  return est;
}

double isometry_ratio(const NetworkParams& net, const Vector& x,
                      std::size_t l) {
  if (!net.bias_spec.is_zero()) {
    throw std::invalid_argument("isometry_ratio: network must be zero-bias");
  }
  if (l >= net.L) {
    throw std::invalid_argument("isometry_ratio: layer index out of range");
  }
  const double xn = lp_norm(x, Exponent(2.0));
  if (xn == 0.0) {
    throw std::invalid_argument("isometry_ratio: x must be nonzero");
  }
  const ForwardTrace trace = forward(net, x);
  return lp_norm(trace.activations[l], Exponent(2.0)) / xn;
}

double bias_envelope_lambda_prime(const NetworkParams& net) {
  double max_abs = 0.0;
  for (const Vector& b : net.biases) {
    for (double v : b) max_abs = std::max(max_abs, std::fabs(v));
  }
  return max_abs * std::sqrt(static_cast<double>(net.N) / 2.0);
}

double grad_diff_radius(const NetworkParams& net) {
  const double lambda_prime = bias_envelope_lambda_prime(net);
  if (lambda_prime == 0.0) return 1.0;
  if (net.N <= net.d) {
    throw std::invalid_argument("grad_diff_radius: needs N > d");
  }
  const double ratio =
      static_cast<double>(net.N) / static_cast<double>(net.d);
  return std::pow(3.0, static_cast<double>(net.L)) * lambda_prime *
         static_cast<double>(net.N) /
         (static_cast<double>(net.d) * static_cast<double>(net.L)) /
         std::sqrt(std::log(ratio));
}

SummaryStats grad_diff_large_norm(const NetworkParams& net,
                                  std::size_t n_samples, const RngStream& rng,
                                  double radius_scale) {
  if (n_samples < 1) {
    throw std::invalid_argument("grad_diff_large_norm: need n_samples >= 1");
  }
  const double radius = radius_scale * grad_diff_radius(net);
  const NetworkParams hom = zero_bias_counterpart(net);

  std::vector<double> diffs(n_samples);
  for (std::size_t start = 0; start < n_samples; start += kBatch) {
    const std::size_t count = std::min(kBatch, n_samples - start);
    Matrix points(count, net.d);
    for (std::size_t s = 0; s < count; ++s) {
      RngStream point_rng = rng.substream(start + s);
      const Vector x = scale(radius, point_rng.next_unit_vector(net.d));
      for (std::size_t j = 0; j < net.d; ++j) points.at(s, j) = x[j];
    }
    const Matrix g_bias = batch_formal_gradients(net, points);
    const Matrix g_hom = batch_formal_gradients(hom, points);
    for (std::size_t s = 0; s < count; ++s) {
      double sq = 0.0;
      for (std::size_t j = 0; j < net.d; ++j) {
        const double delta = g_bias.at(s, j) - g_hom.at(s, j);
        sq += delta * delta;
      }
      diffs[start + s] = std::sqrt(sq);
    }
  }
  return summarize(diffs);
}

}  // namespace relulab
