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

#include "relulab/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace relulab {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// SplitMix64 finalizer; statistically strong enough to act as the mixing
// function of a counter-mode generator at simulation quality.
inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

inline std::uint64_t derive_key(std::uint64_t base, std::uint64_t index) {
  // Two finalizer rounds decorrelate nearby (base, index) pairs.
  return mix64(mix64(base + kGolden) ^ (index * kGolden + 1));
}

}  // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
    : master_seed_(master_seed),
      stream_index_(stream_index),
      key_(derive_key(master_seed, stream_index)) {}

RngStream::RngStream(std::uint64_t key, std::uint64_t index, int)
    : master_seed_(key), stream_index_(index), key_(derive_key(key, index)) {}

RngStream RngStream::substream(std::uint64_t index) const {
  return RngStream(key_, index, 0);
}

std::uint64_t RngStream::next_u64() { return mix64(key_ + kGolden * ++counter_); }

double RngStream::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::next_gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  while (true) {
    const double u = 2.0 * next_unit() - 1.0;
    const double v = 2.0 * next_unit() - 1.0;
    const double s = u * u + v * v;
    if (s > 0.0 && s < 1.0) {
      const double f = std::sqrt(-2.0 * std::log(s) / s);
      spare_ = v * f;
      has_spare_ = true;
      return u * f;
    }
  }
}

void RngStream::fill_gaussian(std::vector<double>& out, double variance) {
  if (!(variance > 0.0)) {
    throw std::invalid_argument("fill_gaussian: variance must be positive");
  }
  const double sd = std::sqrt(variance);
  for (double& x : out) {
    x = sd * next_gaussian();
  }
}

std::vector<double> RngStream::next_unit_vector(std::size_t dim) {
  std::vector<double> v(dim);
  while (true) {
    double sq = 0.0;
    for (double& x : v) {
      x = next_gaussian();
      sq += x * x;
    }
    if (sq > 0.0) {
      const double inv = 1.0 / std::sqrt(sq);
      for (double& x : v) x *= inv;
      return v;
    }
  }
}

bool RngStream::next_bit() { return (next_u64() >> 63) != 0; }

}  // namespace relulab
