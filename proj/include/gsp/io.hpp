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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "gsp/completion.hpp"
#include "gsp/graph.hpp"
#include "gsp/recovery.hpp"
#include "gsp/selection.hpp"

#include "json.hpp"

namespace gsp::io {

// Edge list: header `src,dst,weight`, zero-based indices, each edge once.
// node_count <= 0 infers N as the largest index + 1.
void write_edge_list(std::ostream& os, const Graph& g);
Graph read_edge_list(std::istream& is, NodeIndex node_count = 0);

// Signals: header `node,value`, one row per node in order.
void write_signal(std::ostream& os, const Eigen::VectorXd& x);
Eigen::VectorXd read_signal(std::istream& is);

// Samples: header `index,value`.
void write_samples(std::ostream& os, const Eigen::VectorXd& c);
Eigen::VectorXd read_samples(std::istream& is);

// Sampling set: header `node`, one index per row, order preserved.
void write_node_set(std::ostream& os, const std::vector<NodeIndex>& nodes);
std::vector<NodeIndex> read_node_set(std::istream& is);

// Partition: header `node,cell`.
PiecewiseConstant read_partition(std::istream& is);

// Matrices: `# rows=R cols=C`, header `row,col,value`, then triples.
struct Triples {
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  std::vector<Entry> entries;
  std::vector<double> values;
};
void write_triples(std::ostream& os, const Triples& t);
Triples read_triples(std::istream& is);
Triples dense_to_triples(const Eigen::MatrixXd& m);
Eigen::MatrixXd triples_to_dense(const Triples& t);

nlohmann::json to_json(const SelectionResult& r);
nlohmann::json to_json(const RecoveryReport<double>& r);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace gsp::io
