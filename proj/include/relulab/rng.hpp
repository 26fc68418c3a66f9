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
#include <vector>

namespace relulab {

/// Counter-based random stream.
///
/// A stream is identified by (master_seed, stream_index); the n-th output is a
/// strong 64-bit mix of the derived key and the counter n, so identical
/// identifiers always reproduce the identical sequence and distinct stream
/// indices give statistically independent sequences without any coordination.
/// Substreams derive fresh keys from the parent key, independent of how many
/// values the parent has already produced.
///
/// Single consumer per stream; hand each concurrent worker its own substream.
class RngStream {
 public:
  explicit RngStream(std::uint64_t master_seed, std::uint64_t stream_index = 0);

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

  /// Child stream with key derived from (parent key, index).
  RngStream substream(std::uint64_t index) const;

  std::uint64_t next_u64();

  /// Uniform on [0, 1), 53-bit resolution.
  double next_unit();

  /// Standard normal via the polar Marsaglia scheme with a cached spare.
  double next_gaussian();

  /// Fills `out` with i.i.d. N(0, variance) values.
  void fill_gaussian(std::vector<double>& out, double variance);

  /// Uniform point on the unit sphere of dimension dim.
  std::vector<double> next_unit_vector(std::size_t dim);

  /// Fair coin.
  bool next_bit();

 private:
  RngStream(std::uint64_t key, std::uint64_t index, int /*derived_tag*/);

  std::uint64_t master_seed_ = 0;
  std::uint64_t stream_index_ = 0;
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace relulab
