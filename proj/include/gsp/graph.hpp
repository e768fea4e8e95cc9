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

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "gsp/error.hpp"
#include "gsp/types.hpp"

namespace gsp {

struct Edge {
  NodeIndex u = 0;
  NodeIndex v = 0;
  double weight = 1.0;
};

inline bool operator==(const Edge& a, const Edge& b) {
  return a.u == b.u && a.v == b.v && a.weight == b.weight;
}

enum class VariationOperatorKind { Combinatorial, SymmetricNormalized };

/// Undirected weighted graph without self-loops.
///
/// Edges are stored once per unordered pair with u < v, sorted by (u, v).
class Graph {
 public:
  Graph() = default;

  Graph(NodeIndex node_count, std::vector<Edge> edges)
      : node_count_(node_count), edges_(std::move(edges)) {
    require(node_count_ > 0, ErrorCode::InvalidGraph, "node count must be positive");
    for (auto& e : edges_) {
      require(e.u >= 0 && e.u < node_count_ && e.v >= 0 && e.v < node_count_,
              ErrorCode::InvalidGraph, "edge endpoint out of range");
      require(e.u != e.v, ErrorCode::InvalidGraph,
              "self-loop at node " + std::to_string(e.u));
      require(std::isfinite(e.weight) && e.weight >= 0.0, ErrorCode::InvalidGraph,
              "edge weights must be finite and nonnegative");
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
      return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    for (std::size_t k = 1; k < edges_.size(); ++k) {
      require(edges_[k].u != edges_[k - 1].u || edges_[k].v != edges_[k - 1].v,
              ErrorCode::InvalidGraph,
              "duplicate edge (" + std::to_string(edges_[k].u) + "," +
                  std::to_string(edges_[k].v) + ")");
    }
  }

  NodeIndex node_count() const { return node_count_; }
  const std::vector<Edge>& edges() const { return edges_; }

  Eigen::VectorXd degrees() const {
    Eigen::VectorXd d = Eigen::VectorXd::Zero(node_count_);
    for (const auto& e : edges_) {
      d[e.u] += e.weight;
      d[e.v] += e.weight;
    }
    return d;
  }

  std::vector<std::vector<NodeIndex>> neighbors() const {
    std::vector<std::vector<NodeIndex>> adj(static_cast<std::size_t>(node_count_));
    for (const auto& e : edges_) {
      if (e.weight == 0.0) continue;
      adj[static_cast<std::size_t>(e.u)].push_back(e.v);
      adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    return adj;
  }

 private:
  NodeIndex node_count_ = 0;
  std::vector<Edge> edges_;
};

/// Component label per node, labels numbered in order of first appearance.
/// Zero-weight edges do not connect.
inline std::vector<int> connected_components(const Graph& g) {
  const auto adj = g.neighbors();
  std::vector<int> label(static_cast<std::size_t>(g.node_count()), -1);
  int next = 0;
  for (NodeIndex s = 0; s < g.node_count(); ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    std::queue<NodeIndex> frontier;
    frontier.push(s);
    label[static_cast<std::size_t>(s)] = next;
    while (!frontier.empty()) {
      const NodeIndex n = frontier.front();
      frontier.pop();
      for (NodeIndex m : adj[static_cast<std::size_t>(n)]) {
        if (label[static_cast<std::size_t>(m)] < 0) {
          label[static_cast<std::size_t>(m)] = next;
          frontier.push(m);
        }
      }
    }
    ++next;
  }
  return label;
}

inline int component_count(const Graph& g) {
  const auto labels = connected_components(g);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

template <typename Scalar = double>
Matrix<Scalar> adjacency(const Graph& g) {
  Matrix<Scalar> w = Matrix<Scalar>::Zero(g.node_count(), g.node_count());
  for (const auto& e : g.edges()) {
    w(e.u, e.v) = static_cast<Scalar>(e.weight);
    w(e.v, e.u) = static_cast<Scalar>(e.weight);
  }
  return w;
}

namespace detail {

// D^{-1/2} with zero-degree nodes mapped to 0.
template <typename Scalar>
Vector<Scalar> inverse_sqrt_degrees(const Graph& g) {
  const Eigen::VectorXd d = g.degrees();
  Vector<Scalar> s(d.size());
  for (Eigen::Index i = 0; i < d.size(); ++i)
    s[i] = d[i] > 0.0 ? Scalar(1) / std::sqrt(static_cast<Scalar>(d[i])) : Scalar(0);
  return s;
}

}  // namespace detail

/// Laplacian stored sparse for O(|E|) products.
template <typename Scalar = double>
Eigen::SparseMatrix<Scalar> sparse_laplacian(
    const Graph& g, VariationOperatorKind kind = VariationOperatorKind::Combinatorial) {
  const NodeIndex n = g.node_count();
  const Eigen::VectorXd d = g.degrees();
  Vector<Scalar> s = Vector<Scalar>::Ones(n);
  if (kind == VariationOperatorKind::SymmetricNormalized) s = detail::inverse_sqrt_degrees<Scalar>(g);
  std::vector<Eigen::Triplet<Scalar>> triplets;
  triplets.reserve(g.edges().size() * 2 + static_cast<std::size_t>(n));
  for (NodeIndex i = 0; i < n; ++i)
    triplets.emplace_back(i, i, static_cast<Scalar>(d[i]) * s[i] * s[i]);
  for (const auto& e : g.edges()) {
    const Scalar w = -static_cast<Scalar>(e.weight) * s[e.u] * s[e.v];
    triplets.emplace_back(e.u, e.v, w);
    triplets.emplace_back(e.v, e.u, w);
  }
  Eigen::SparseMatrix<Scalar> l(n, n);
  l.setFromTriplets(triplets.begin(), triplets.end());
  return l;
}

/// Combinatorial L = D - W, or D^{-1/2} L D^{-1/2}. Isolated nodes give zero rows.
/// Each off-diagonal value is computed once, so the result is exactly symmetric.
template <typename Scalar = double>
Matrix<Scalar> build_laplacian(const Graph& g,
                               VariationOperatorKind kind = VariationOperatorKind::Combinatorial) {
  return Matrix<Scalar>(sparse_laplacian<Scalar>(g, kind));
}

}  // namespace gsp
