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

#include "relulab/network_io.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace relulab {

namespace {

using nlohmann::json;

json bias_spec_to_json(const BiasSpec& spec) {
  json j;
  switch (spec.kind) {
    case BiasSpec::Kind::zero:
      j["kind"] = "zero";
      break;
    case BiasSpec::Kind::gaussian:
      j["kind"] = "gaussian";
      j["sigma"] = spec.sigma;
      break;
    case BiasSpec::Kind::uniform:
      j["kind"] = "uniform";
      j["sigma"] = spec.sigma;
      break;
  }
  return j;
}

BiasSpec bias_spec_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "zero") return BiasSpec::zero();
  if (kind == "gaussian") return BiasSpec::gaussian(j.at("sigma").get<double>());
  if (kind == "uniform") return BiasSpec::uniform(j.at("sigma").get<double>());
  throw std::invalid_argument("bias_spec: unknown kind '" + kind + "'");
}

}  // namespace

std::string network_to_json(const NetworkParams& net) {
  json j;
  j["d"] = net.d;
  j["N"] = net.N;
  j["L"] = net.L;
  json weights = json::array();
  for (const Matrix& w : net.weights) {
    weights.push_back(
        {{"rows", w.rows}, {"cols", w.cols}, {"entries", w.data}});
  }
  j["weights"] = std::move(weights);
  j["biases"] = net.biases;
  j["output_bias"] = net.output_bias;
  j["weight_variances"] = net.weight_variances;
  j["bias_spec"] = bias_spec_to_json(net.bias_spec);
  j["seed"] = {{"master", net.seed.master},
               {"stream", net.seed.stream},
               {"sampled", net.seed.sampled}};
  return j.dump(2);
}

NetworkParams network_from_json(const std::string& text) {
  json j = json::parse(text);
  NetworkParams net;
  net.d = j.at("d").get<std::size_t>();
  net.N = j.at("N").get<std::size_t>();
  net.L = j.at("L").get<std::size_t>();
  for (const json& wj : j.at("weights")) {
    Matrix w(wj.at("rows").get<std::size_t>(), wj.at("cols").get<std::size_t>());
    w.data = wj.at("entries").get<std::vector<double>>();
    if (w.data.size() != w.rows * w.cols) {
      throw std::invalid_argument("network json: entry count does not match shape");
    }
    net.weights.push_back(std::move(w));
  }
  net.biases = j.at("biases").get<std::vector<Vector>>();
  net.output_bias = j.at("output_bias").get<double>();
  net.weight_variances = j.at("weight_variances").get<std::vector<double>>();
  net.bias_spec = bias_spec_from_json(j.at("bias_spec"));
  const json& seed = j.at("seed");
  net.seed.master = seed.at("master").get<std::uint64_t>();
  net.seed.stream = seed.at("stream").get<std::uint64_t>();
  net.seed.sampled = seed.at("sampled").get<bool>();
  validate_network(net);
  return net;
}

void save_network(const NetworkParams& net, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("save_network: cannot open '" + path + "'");
  }
  out << network_to_json(net) << '\n';
}

NetworkParams load_network(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("load_network: cannot open '" + path + "'");
  }
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return network_from_json(text);
}

}  // namespace relulab
