// Copyright 2026 The gsp Authors.
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
#include <random>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "gsp/graph.hpp"

namespace gsp {

/// N points uniform in the unit square joined to their k nearest neighbours
/// (symmetrized), weighted exp(-d^2 / (2 sigma^2)) with sigma the mean k-NN distance.
struct RandomSensor {
  NodeIndex n = 64;
  int k_neighbors = 6;
};

/// Unit-weight stochastic block graph; nodes are numbered cluster by cluster.
struct Community {
  std::vector<NodeIndex> cluster_sizes;
  double p_in = 0.8;
  double p_out = 0.01;
};

struct PathGraph {
  NodeIndex n = 2;
};

struct CycleGraph {
  NodeIndex n = 3;
};

struct CompleteGraph {
  NodeIndex n = 2;
};

struct GeneratorSpec {
  std::variant<RandomSensor, Community, PathGraph, CycleGraph, CompleteGraph> kind;
  std::uint64_t seed = 0;
};

/// Deterministic in (kind, seed). Throws InvalidSpec for invalid parameters.
Graph gen_graph(const GeneratorSpec& spec);

/// Cluster index of every node of a Community graph.
std::vector<int> community_labels(const Community& spec);

/// Uniform draw in [0, 1) from the top 53 bits of the engine output.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Eigen::VectorXd normal_vector(Eigen::Index n, double mean, double stddev, std::mt19937_64& rng);

}  // namespace gsp
