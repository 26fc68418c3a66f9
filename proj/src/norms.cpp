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

#include "relulab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace relulab {

Exponent::Exponent(double p) : p_(p) {
  if (!(p >= 1.0) || std::isinf(p)) {
    throw std::invalid_argument("Exponent: finite p must satisfy p >= 1");
  }
}

Exponent Exponent::infinity() {
  Exponent e;
  e.infinite_ = true;
  return e;
}

double Exponent::value() const {
  if (infinite_) {
    throw std::logic_error("Exponent::value: exponent is infinite");
  }
  return p_;
}

Exponent Exponent::conjugate() const {
  if (infinite_) return Exponent(1.0);
  if (p_ == 1.0) return Exponent::infinity();
  return Exponent(p_ / (p_ - 1.0));
}

std::string Exponent::str() const {
  if (infinite_) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", p_);
  return buf;
}

bool operator==(const Exponent& a, const Exponent& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ && b.infinite_;
  return a.p_ == b.p_;
}

Exponent parse_exponent(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "INF") {
    return Exponent::infinity();
  }
  std::size_t pos = 0;
  const double p = std::stod(text, &pos);
  if (pos != text.size()) {
    throw std::invalid_argument("parse_exponent: trailing characters in '" +
                                text + "'");
  }
  return Exponent(p);
}

double lp_norm(const Vector& v, const Exponent& p) {
  if (p.is_infinite()) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
  }
  const double pv = p.value();
  if (pv == 1.0) {
    double s = 0.0;
    for (double x : v) s += std::fabs(x);
    return s;
  }
  if (pv == 2.0) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
  }
  // Scale by the max entry so that the power sum cannot overflow.
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (double x : v) s += std::pow(std::fabs(x) / m, pv);
  return m * std::pow(s, 1.0 / pv);
}

double operator_norm_2(const Matrix& a, double tol) {
  if (a.rows == 0 || a.cols == 0) {
    throw std::invalid_argument("operator_norm_2: matrix must be nonempty");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("operator_norm_2: tol must be positive");
  }

  constexpr int kMaxIterations = 10000;

  Vector v(a.cols, 1.0 / std::sqrt(static_cast<double>(a.cols)));
  double sigma = 0.0;
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    Vector w = matvec(a, v);
    double wn = lp_norm(w, Exponent(2.0));
    if (wn == 0.0) {
      if (iter > 0) return 0.0;
      // All-ones start can land in the null space of a nonzero matrix;
      // restart from the heaviest column's basis vector.
      std::size_t best = 0;
      double best_sq = -1.0;
      for (std::size_t j = 0; j < a.cols; ++j) {
        double sq = 0.0;
        for (std::size_t i = 0; i < a.rows; ++i) {
          sq += a.at(i, j) * a.at(i, j);
        }
        if (sq > best_sq) {
          best_sq = sq;
          best = j;
        }
      }
      if (best_sq <= 0.0) return 0.0;
      std::fill(v.begin(), v.end(), 0.0);
      v[best] = 1.0;
      w = matvec(a, v);
      wn = lp_norm(w, Exponent(2.0));
      if (wn == 0.0) return 0.0;
    }
    const double prev = sigma;
    sigma = wn;
    if (iter > 0 && std::fabs(sigma - prev) <= tol * std::max(sigma, 1e-300)) {
      return sigma;
    }
    Vector u = vecmat(w, a);  // A^T (A v)
    const double un = lp_norm(u, Exponent(2.0));
    if (un == 0.0) return sigma;
    for (std::size_t i = 0; i < u.size(); ++i) v[i] = u[i] / un;
  }
  throw PowerIterationError(
      "operator_norm_2: no convergence within 10000 iterations", sigma);
}

}  // namespace relulab
