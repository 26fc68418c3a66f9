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

#define EIGEN_DONT_PARALLELIZE
#include "relulab/matrix.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace relulab {

namespace {

using EigenRowMajor =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MapM = Eigen::Map<EigenRowMajor>;
using CMapM = Eigen::Map<const EigenRowMajor>;
using MapV = Eigen::Map<Eigen::VectorXd>;
using CMapV = Eigen::Map<const Eigen::VectorXd>;

CMapM view(const Matrix& m) {
  return CMapM(m.data.data(), static_cast<Eigen::Index>(m.rows),
               static_cast<Eigen::Index>(m.cols));
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

bool all_finite(const Vector& v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

bool all_finite(const Matrix& m) { return all_finite(m.data); }

Matrix gaussian_matrix(std::size_t rows, std::size_t cols, double variance,
                       RngStream& rng) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("gaussian_matrix: dimensions must be >= 1");
  }
  if (!(variance > 0.0)) {
    throw std::invalid_argument("gaussian_matrix: variance must be positive");
  }
  Matrix m(rows, cols);
  rng.fill_gaussian(m.data, variance);
  return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) {
    throw std::invalid_argument("matmul: inner dimensions do not match");
  }
  Matrix out(a.rows, b.cols);
  MapM(out.data.data(), static_cast<Eigen::Index>(out.rows),
       static_cast<Eigen::Index>(out.cols)) = view(a) * view(b);
  return out;
}

Vector matvec(const Matrix& a, const Vector& x) {
  if (a.cols != x.size()) {
    throw std::invalid_argument("matvec: dimension mismatch");
  }
  Vector out(a.rows);
  MapV(out.data(), static_cast<Eigen::Index>(out.size())) =
      view(a) * CMapV(x.data(), static_cast<Eigen::Index>(x.size()));
  return out;
}

Vector vecmat(const Vector& x, const Matrix& a) {
  if (a.rows != x.size()) {
    throw std::invalid_argument("vecmat: dimension mismatch");
  }
  Vector out(a.cols);
  MapV(out.data(), static_cast<Eigen::Index>(out.size())) =
      view(a).transpose() * CMapV(x.data(), static_cast<Eigen::Index>(x.size()));
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.cols, a.rows);
  MapM(out.data.data(), static_cast<Eigen::Index>(out.rows),
       static_cast<Eigen::Index>(out.cols)) = view(a).transpose();
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) {
    throw std::invalid_argument("matrix difference: shape mismatch");
  }
  Matrix out(a.rows, a.cols);
  for (std::size_t i = 0; i < out.data.size(); ++i) {
    out.data[i] = a.data[i] - b.data[i];
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) {
    throw std::invalid_argument("matrix sum: shape mismatch");
  }
  Matrix out(a.rows, a.cols);
  for (std::size_t i = 0; i < out.data.size(); ++i) {
    out.data[i] = a.data[i] + b.data[i];
  }
  return out;
}

double frobenius_norm(const Matrix& a) {
  double s = 0.0;
  for (double x : a.data) s += x * x;
  return std::sqrt(s);
}

double dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dot: dimension mismatch");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vector axpy(double alpha, const Vector& x, const Vector& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("axpy: dimension mismatch");
  }
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = alpha * x[i] + y[i];
  return out;
}

Vector scale(double alpha, const Vector& x) {
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = alpha * x[i];
  return out;
}

Vector sub(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("sub: dimension mismatch");
  }
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

}  // namespace relulab
