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

#include "relulab/tessellation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "relulab/norms.hpp"
#include "relulab/stats.hpp"

namespace relulab {

namespace {

int sgn(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

Vector normalized(const Vector& x, const char* who) {
  const double n = lp_norm(x, Exponent(2.0));
  if (n == 0.0) {
    throw std::invalid_argument(std::string(who) + ": zero vector");
  }
  return scale(1.0 / n, x);
}

/// Unit vector orthogonal to unit x, built by Gram-Schmidt from a fresh
/// Gaussian draw (re-drawn in the measure-zero degenerate case).
Vector random_orthogonal_unit(const Vector& x, RngStream& rng) {
  while (true) {
    Vector g(x.size());
    for (double& v : g) v = rng.next_gaussian();
    const double proj = dot(g, x);
    Vector u = axpy(-proj, x, g);
    const double n = lp_norm(u, Exponent(2.0));
    if (n > 1e-12) return scale(1.0 / n, u);
  }
}

}  // namespace

double angular_distance(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("angular_distance: dimension mismatch");
  }
  const Vector xu = normalized(x, "angular_distance");
  const Vector yu = normalized(y, "angular_distance");
  const double inner = std::clamp(dot(xu, yu), -1.0, 1.0);
  return std::acos(inner) / M_PI;
}

FlipCountResult sign_flip_count(const Matrix& A, const Vector& x,
                                const Vector& y,
                                const std::optional<Vector>& biases) {
  if (A.cols != x.size() || A.cols != y.size()) {
    throw std::invalid_argument("sign_flip_count: dimension mismatch");
  }
  if (biases && biases->size() != A.rows) {
    throw std::invalid_argument("sign_flip_count: bias length mismatch");
  }
  const Vector ax = matvec(A, x);
  const Vector ay = matvec(A, y);
  FlipCountResult result;
  result.m = A.rows;
  for (std::size_t i = 0; i < A.rows; ++i) {
    const double b = biases ? (*biases)[i] : 0.0;
    if (sgn(ax[i] + b) != sgn(ay[i] + b)) ++result.flips;
  }
  result.fraction = result.m == 0
                        ? 0.0
                        : static_cast<double>(result.flips) /
                              static_cast<double>(result.m);
  return result;
}

FlipCountResult bias_flip_large_norm(const Matrix& A, const Vector& taus,
                                     const Vector& x) {
  if (A.cols != x.size() || A.rows != taus.size()) {
    throw std::invalid_argument("bias_flip_large_norm: dimension mismatch");
  }
  const Vector ax = matvec(A, x);
  FlipCountResult result;
  result.m = A.rows;
  for (std::size_t i = 0; i < A.rows; ++i) {
    if (sgn(ax[i] + taus[i]) != sgn(ax[i])) ++result.flips;
  }
  result.fraction = result.m == 0
                        ? 0.0
                        : static_cast<double>(result.flips) /
                              static_cast<double>(result.m);
  return result;
}

Vector unit_vector_at_angle(const Vector& x, double angle, RngStream& rng) {
  if (!(angle > 0.0) || !(angle < 1.0)) {
    throw std::invalid_argument("unit_vector_at_angle: angle must be in (0,1)");
  }
  const Vector xu = normalized(x, "unit_vector_at_angle");
  const Vector u = random_orthogonal_unit(xu, rng);
  const double c = std::cos(M_PI * angle);
  const double s = std::sin(M_PI * angle);
  return axpy(c, xu, scale(s, u));
}

std::vector<FlipFractionRow> flip_fraction_vs_angle_experiment(
    std::size_t n, std::size_t m, const std::vector<double>& angle_grid,
    std::size_t n_trials, const RngStream& rng) {
  if (n < 2 || m < 1 || n_trials < 1) {
    throw std::invalid_argument(
        "flip_fraction_vs_angle_experiment: need n >= 2, m >= 1, trials >= 1");
  }
  std::vector<FlipFractionRow> rows;
  rows.reserve(angle_grid.size());
  for (std::size_t a = 0; a < angle_grid.size(); ++a) {
    const double angle = angle_grid[a];
    if (!(angle > 0.0) || !(angle < 1.0)) {
      throw std::invalid_argument(
          "flip_fraction_vs_angle_experiment: angles must be in (0,1)");
    }
    std::vector<double> fractions(n_trials);
    for (std::size_t t = 0; t < n_trials; ++t) {
      RngStream trial = rng.substream(a * n_trials + t);
      const Vector x = trial.next_unit_vector(n);
      const Vector y = unit_vector_at_angle(x, angle, trial);
      const Matrix A = gaussian_matrix(m, n, 1.0, trial);
      fractions[t] = sign_flip_count(A, x, y).fraction;
    }
    const SummaryStats s = summarize(fractions);
    rows.push_back({angle, s.mean, s.std});
  }
  return rows;
}

double local_flip_max_experiment(std::size_t n, std::size_t m, double eps,
                                 std::size_t n_pairs, const RngStream& rng) {
  if (eps < 0.0) {
    throw std::invalid_argument("local_flip_max_experiment: eps must be >= 0");
  }
  if (n < 2 || m < 1 || n_pairs < 1) {
    throw std::invalid_argument(
        "local_flip_max_experiment: need n >= 2, m >= 1, pairs >= 1");
  }
  RngStream matrix_rng = rng.substream(0);
  const Matrix A = gaussian_matrix(m, n, 1.0, matrix_rng);
  double max_fraction = 0.0;
  for (std::size_t p = 0; p < n_pairs; ++p) {
    RngStream pair_rng = rng.substream(p + 1);
    const Vector x = pair_rng.next_unit_vector(n);
    if (eps == 0.0) continue;  // y == x, zero flips
    const Vector u = random_orthogonal_unit(x, pair_rng);
    // Geodesic step of arc length eps: ||x - y||_2 = 2 sin(eps/2) <= eps.
    const Vector y = axpy(std::cos(eps), x, scale(std::sin(eps), u));
    max_fraction = std::max(max_fraction, sign_flip_count(A, x, y).fraction);
  }
  return max_fraction;
}

}  // namespace relulab
