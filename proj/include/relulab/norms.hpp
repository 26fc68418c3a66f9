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

#include <stdexcept>
#include <string>

#include "relulab/matrix.hpp"

namespace relulab {

/// Norm index p in [1, inf]. Infinity is a distinguished state, never a large
/// float, so p-power arithmetic cannot overflow.
class Exponent {
 public:
  /// Finite exponent, requires p >= 1.
  explicit Exponent(double p);

  static Exponent infinity();

  bool is_infinite() const { return infinite_; }

  /// Finite value; throws for the infinite exponent.
  double value() const;

  /// p' with 1/p + 1/p' = 1; maps 1 <-> inf and fixes 2.
  Exponent conjugate() const;

  /// "inf" or a decimal rendering of the finite value.
  std::string str() const;

  friend bool operator==(const Exponent& a, const Exponent& b);

 private:
  Exponent() = default;
  double p_ = 0.0;
  bool infinite_ = false;
};

/// Parses "inf"/"Inf"/"INF" or a decimal number >= 1.
Exponent parse_exponent(const std::string& text);

double lp_norm(const Vector& v, const Exponent& p);

inline Exponent conjugate_exponent(const Exponent& p) { return p.conjugate(); }

/// Largest singular value by power iteration on A^T A; deterministic
/// normalized all-ones start, 10000-iteration cap, relative tolerance `tol`.
/// Non-convergence throws PowerIterationError carrying the last iterate.
double operator_norm_2(const Matrix& a, double tol = 1e-10);

class PowerIterationError : public std::runtime_error {
 public:
  PowerIterationError(const std::string& what, double last_estimate)
      : std::runtime_error(what), last_estimate_(last_estimate) {}
  double last_estimate() const { return last_estimate_; }

 private:
  double last_estimate_;
};

}  // namespace relulab
