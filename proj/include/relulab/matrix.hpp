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
#include <vector>

#include "relulab/rng.hpp"

namespace relulab {

using Vector = std::vector<double>;

/// Dense real matrix, row-major storage.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;  // rows * cols entries, row-major

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  static Matrix identity(std::size_t n);
};

bool all_finite(const Vector& v);
bool all_finite(const Matrix& m);

/// Entries i.i.d. N(0, variance), row-major fill order, deterministic per stream.
Matrix gaussian_matrix(std::size_t rows, std::size_t cols, double variance,
                       RngStream& rng);

Matrix matmul(const Matrix& a, const Matrix& b);
Vector matvec(const Matrix& a, const Vector& x);
/// Row vector times matrix: (1 x rows(a)) * a.
Vector vecmat(const Vector& x, const Matrix& a);
Matrix transpose(const Matrix& a);

Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);

double frobenius_norm(const Matrix& a);

double dot(const Vector& a, const Vector& b);
Vector axpy(double alpha, const Vector& x, const Vector& y);  // alpha*x + y
Vector scale(double alpha, const Vector& x);
Vector sub(const Vector& a, const Vector& b);

}  // namespace relulab
