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

#include "gsp/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "gsp/error.hpp"

namespace gsp {

namespace {

Graph random_sensor(const RandomSensor& spec, std::mt19937_64& rng) {
  require(spec.n >= 2, ErrorCode::InvalidSpec, "random sensor graph needs N >= 2");
  require(spec.k_neighbors >= 1 && spec.k_neighbors < spec.n, ErrorCode::InvalidSpec,
          "k_neighbors must be in [1, N)");
  const auto n = static_cast<std::size_t>(spec.n);
  const auto k = static_cast<std::size_t>(spec.k_neighbors);
  std::vector<double> px(n), py(n);
  for (std::size_t i = 0; i < n; ++i) {
    px[i] = uniform01(rng);
    py[i] = uniform01(rng);
  }
  auto dist = [&](std::size_t a, std::size_t b) { return std::hypot(px[a] - px[b], py[a] - py[b]); };

  std::set<std::pair<std::size_t, std::size_t>> pairs;
  double total = 0.0;
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i) {
    order.clear();
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) order.push_back(j);
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end(),
                      [&](std::size_t a, std::size_t b) {
                        const double da = dist(i, a), db = dist(i, b);
                        return da != db ? da < db : a < b;
                      });
    for (std::size_t j = 0; j < k; ++j) {
      total += dist(i, order[j]);
      pairs.emplace(std::min(i, order[j]), std::max(i, order[j]));
    }
  }
  const double sigma = total / static_cast<double>(n * k);
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    const double d = dist(a, b);
    edges.push_back({static_cast<NodeIndex>(a), static_cast<NodeIndex>(b),
                     sigma > 0.0 ? std::exp(-d * d / (2.0 * sigma * sigma)) : 1.0});
  }
  return Graph(spec.n, std::move(edges));
}

Graph community(const Community& spec, std::mt19937_64& rng) {
  require(!spec.cluster_sizes.empty(), ErrorCode::InvalidSpec, "community graph needs clusters");
  for (NodeIndex s : spec.cluster_sizes)
    require(s >= 1, ErrorCode::InvalidSpec, "cluster sizes must be positive");
  require(spec.p_in >= 0.0 && spec.p_in <= 1.0 && spec.p_out >= 0.0 && spec.p_out <= 1.0,
          ErrorCode::InvalidSpec, "edge probabilities must lie in [0, 1]");
  const auto labels = community_labels(spec);
  const auto n = static_cast<NodeIndex>(labels.size());
  std::vector<Edge> edges;
  for (NodeIndex u = 0; u < n; ++u) {
    for (NodeIndex v = u + 1; v < n; ++v) {
      const double p = labels[static_cast<std::size_t>(u)] == labels[static_cast<std::size_t>(v)]
                           ? spec.p_in
                           : spec.p_out;
      if (uniform01(rng) < p) edges.push_back({u, v, 1.0});
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace

std::vector<int> community_labels(const Community& spec) {
  std::vector<int> labels;
  for (std::size_t c = 0; c < spec.cluster_sizes.size(); ++c)
    labels.insert(labels.end(), static_cast<std::size_t>(spec.cluster_sizes[c]), static_cast<int>(c));
  return labels;
}

Eigen::VectorXd normal_vector(Eigen::Index n, double mean, double stddev, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(mean, stddev);
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = normal(rng);
  return v;
}

Graph gen_graph(const GeneratorSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  if (const auto* s = std::get_if<RandomSensor>(&spec.kind)) return random_sensor(*s, rng);
  if (const auto* c = std::get_if<Community>(&spec.kind)) return community(*c, rng);
  std::vector<Edge> edges;
  if (const auto* p = std::get_if<PathGraph>(&spec.kind)) {
    require(p->n >= 1, ErrorCode::InvalidSpec, "path needs N >= 1");
    for (NodeIndex i = 0; i + 1 < p->n; ++i) edges.push_back({i, i + 1, 1.0});
    return Graph(p->n, std::move(edges));
  }
  if (const auto* c = std::get_if<CycleGraph>(&spec.kind)) {
    require(c->n >= 3, ErrorCode::InvalidSpec, "cycle needs N >= 3");
    for (NodeIndex i = 0; i < c->n; ++i) edges.push_back({i, (i + 1) % c->n, 1.0});
    return Graph(c->n, std::move(edges));
  }
  const auto& k = std::get<CompleteGraph>(spec.kind);
  require(k.n >= 1, ErrorCode::InvalidSpec, "complete graph needs N >= 1");
  for (NodeIndex i = 0; i < k.n; ++i)
    for (NodeIndex j = i + 1; j < k.n; ++j) edges.push_back({i, j, 1.0});
  return Graph(k.n, std::move(edges));
}

}  // namespace gsp
