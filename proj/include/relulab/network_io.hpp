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

#include <string>

#include "relulab/network.hpp"

namespace relulab {

// Network document layout:
//   {"d":…, "N":…, "L":…, "weights":[[…]…], "biases":[[…]…],
//    "output_bias":…, "bias_spec":{"kind":…, "sigma":…},
//    "weight_variances":[…], "seed":{"master":…, "stream":…, "sampled":…}}
// Weight matrices are stored as row-major flat arrays next to their shapes.
// Round-trips are value-exact for all finite doubles.

std::string network_to_json(const NetworkParams& net);
NetworkParams network_from_json(const std::string& text);

void save_network(const NetworkParams& net, const std::string& path);
NetworkParams load_network(const std::string& path);

}  // namespace relulab
