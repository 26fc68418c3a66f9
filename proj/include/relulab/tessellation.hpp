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

#include <cstddef>
#include <optional>
#include <vector>

#include "relulab/matrix.hpp"
#include "relulab/rng.hpp"

namespace relulab {

struct FlipCountResult {
  std::size_t m = 0;
  std::size_t flips = 0;
  double fraction = 0.0;
};

/// (1/pi) arccos(<x/|x|, y/|y|>), inner product clamped to [-1, 1].
double angular_distance(const Vector& x, const Vector& y);

/// Rows of A whose (optionally bias-shifted) signs at x and y differ.
/// sgn(0) counts as 0 and flips against either strict sign.
FlipCountResult sign_flip_count(const Matrix& A, const Vector& x,
                                const Vector& y,
                                const std::optional<Vector>& biases = {});

/// Rows where adding tau_i changes the sign of (Ax)_i.
FlipCountResult bias_flip_large_norm(const Matrix& A, const Vector& taus,
                                     const Vector& x);

struct FlipFractionRow {
  double angle = 0.0;
  double mean_fraction = 0.0;
  double std = 0.0;
};

/// For each target angle, builds exact-angle unit pairs (Gram-Schmidt
/// construction y = cos(pi t) x + sin(pi t) u) and records flip fractions over
/// fresh m x n standard Gaussian matrices.
std::vector<FlipFractionRow> flip_fraction_vs_angle_experiment(
    std::size_t n, std::size_t m, const std::vector<double>& angle_grid,
    std::size_t n_trials, const RngStream& rng);

/// Unit vector at exact angular distance `angle` from x (angle in (0, 1)).
Vector unit_vector_at_angle(const Vector& x, double angle, RngStream& rng);

/// Max flip fraction over n_pairs sphere pairs at Euclidean distance <= eps,
/// one shared m x n Gaussian matrix. Pairs step geodesically by eps in a
/// random tangent direction.
double local_flip_max_experiment(std::size_t n, std::size_t m, double eps,
                                 std::size_t n_pairs, const RngStream& rng);

}  // namespace relulab
