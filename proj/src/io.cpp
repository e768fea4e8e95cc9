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

#include "gsp/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "gsp/error.hpp"

namespace gsp::io {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    const auto first = cell.find_first_not_of(" \t\r");
    const auto last = cell.find_last_not_of(" \t\r");
    out.push_back(first == std::string::npos ? "" : cell.substr(first, last - first + 1));
  }
  return out;
}

// Reads data rows after the expected header, skipping blank and `#` lines.
template <typename RowFn>
void read_csv(std::istream& is, const std::vector<std::string>& header, RowFn&& on_row,
              std::string* comment = nullptr) {
  std::string line;
  bool seen_header = false;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (line[0] == '#') {
      if (comment) *comment += line + "\n";
      continue;
    }
    auto cells = split(line);
    if (!seen_header) {
      require(cells == header, ErrorCode::ParseError,
              "line " + std::to_string(line_no) + ": expected header '" + [&] {
                std::string h;
                for (std::size_t i = 0; i < header.size(); ++i) h += (i ? "," : "") + header[i];
                return h;
              }() + "'");
      seen_header = true;
      continue;
    }
    require(cells.size() == header.size(), ErrorCode::ParseError,
            "line " + std::to_string(line_no) + ": expected " + std::to_string(header.size()) +
                " fields");
    on_row(cells, line_no);
  }
  require(seen_header, ErrorCode::ParseError, "missing CSV header");
}

double to_double(const std::string& s, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad number '" + s + "'");
}

NodeIndex to_index(const std::string& s, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used == s.size() && v >= 0) return static_cast<NodeIndex>(v);
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad index '" + s + "'");
}

void precise(std::ostream& os) { os << std::setprecision(std::numeric_limits<double>::max_digits10); }

// Indexed vector with a given header (`node,value` or `index,value`).
Eigen::VectorXd read_indexed(std::istream& is, const std::string& key) {
  std::vector<std::pair<NodeIndex, double>> rows;
  read_csv(is, {key, "value"}, [&](const auto& c, std::size_t ln) {
    rows.emplace_back(to_index(c[0], ln), to_double(c[1], ln));
  });
  Eigen::VectorXd x = Eigen::VectorXd::Constant(static_cast<Eigen::Index>(rows.size()),
                                                std::numeric_limits<double>::quiet_NaN());
  for (const auto& [i, v] : rows) {
    require(i < x.size(), ErrorCode::ParseError, key + " " + std::to_string(i) + " out of range");
    require(std::isnan(x[i]), ErrorCode::ParseError, "duplicate " + key + " " + std::to_string(i));
    x[i] = v;
  }
  return x;
}

void write_indexed(std::ostream& os, const Eigen::VectorXd& x, const std::string& key) {
  precise(os);
  os << key << ",value\n";
  for (Eigen::Index i = 0; i < x.size(); ++i) os << i << ',' << x[i] << '\n';
}

}  // namespace

void write_edge_list(std::ostream& os, const Graph& g) {
  precise(os);
  os << "src,dst,weight\n";
  for (const auto& e : g.edges()) os << e.u << ',' << e.v << ',' << e.weight << '\n';
}

Graph read_edge_list(std::istream& is, NodeIndex node_count) {
  std::vector<Edge> edges;
  NodeIndex max_index = -1;
  read_csv(is, {"src", "dst", "weight"}, [&](const auto& c, std::size_t ln) {
    Edge e{to_index(c[0], ln), to_index(c[1], ln), to_double(c[2], ln)};
    max_index = std::max({max_index, e.u, e.v});
    edges.push_back(e);
  });
  return Graph(node_count > 0 ? node_count : max_index + 1, std::move(edges));
}

void write_signal(std::ostream& os, const Eigen::VectorXd& x) { write_indexed(os, x, "node"); }
Eigen::VectorXd read_signal(std::istream& is) { return read_indexed(is, "node"); }
void write_samples(std::ostream& os, const Eigen::VectorXd& c) { write_indexed(os, c, "index"); }
Eigen::VectorXd read_samples(std::istream& is) { return read_indexed(is, "index"); }

void write_node_set(std::ostream& os, const std::vector<NodeIndex>& nodes) {
  os << "node\n";
  for (NodeIndex n : nodes) os << n << '\n';
}

std::vector<NodeIndex> read_node_set(std::istream& is) {
  std::vector<NodeIndex> nodes;
  read_csv(is, {"node"}, [&](const auto& c, std::size_t ln) { nodes.push_back(to_index(c[0], ln)); });
  return nodes;
}

PiecewiseConstant read_partition(std::istream& is) {
  std::vector<std::pair<NodeIndex, NodeIndex>> rows;
  read_csv(is, {"node", "cell"}, [&](const auto& c, std::size_t ln) {
    rows.emplace_back(to_index(c[0], ln), to_index(c[1], ln));
  });
  PiecewiseConstant p;
  p.cell_of_node.assign(rows.size(), -1);
  for (const auto& [node, cell] : rows) {
    require(node < static_cast<NodeIndex>(rows.size()), ErrorCode::ParseError,
            "partition node " + std::to_string(node) + " out of range");
    p.cell_of_node[static_cast<std::size_t>(node)] = cell;
    p.cells = std::max(p.cells, cell + 1);
  }
  return p;
}

void write_triples(std::ostream& os, const Triples& t) {
  precise(os);
  os << "# rows=" << t.rows << " cols=" << t.cols << '\n' << "row,col,value\n";
  for (std::size_t k = 0; k < t.entries.size(); ++k)
    os << t.entries[k].first << ',' << t.entries[k].second << ',' << t.values[k] << '\n';
}

Triples read_triples(std::istream& is) {
  Triples t;
  std::string comment;
  read_csv(
      is, {"row", "col", "value"},
      [&](const auto& c, std::size_t ln) {
        t.entries.emplace_back(to_index(c[0], ln), to_index(c[1], ln));
        t.values.push_back(to_double(c[2], ln));
      },
      &comment);
  long long rows = -1, cols = -1;
  std::istringstream cs(comment);
  std::string line;
  while (std::getline(cs, line)) {
    if (std::sscanf(line.c_str(), "# rows=%lld cols=%lld", &rows, &cols) == 2) break;
  }
  require(rows > 0 && cols > 0, ErrorCode::ParseError, "missing '# rows=R cols=C' shape line");
  t.rows = rows;
  t.cols = cols;
  for (const auto& [i, j] : t.entries)
    require(i < t.rows && j < t.cols, ErrorCode::ParseError, "matrix entry out of range");
  return t;
}

Triples dense_to_triples(const Eigen::MatrixXd& m) {
  Triples t{m.rows(), m.cols(), {}, {}};
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      t.entries.emplace_back(i, j);
      t.values.push_back(m(i, j));
    }
  }
  return t;
}

Eigen::MatrixXd triples_to_dense(const Triples& t) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(t.rows, t.cols);
  for (std::size_t k = 0; k < t.entries.size(); ++k)
    m(t.entries[k].first, t.entries[k].second) = t.values[k];
  return m;
}

nlohmann::json to_json(const SelectionResult& r) {
  return {{"criterion", r.criterion},
          {"ordered_nodes", r.ordered_nodes},
          {"per_step_score", r.per_step_score}};
}

nlohmann::json to_json(const RecoveryReport<double>& r) {
  return {{"residual_norm", r.residual_norm},
          {"ds_condition_held", r.ds_condition_held},
          {"smallest_singular_value", r.smallest_singular_value}};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::ParseError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  require(static_cast<bool>(out), ErrorCode::ParseError, "cannot write " + path.string());
  out << content;
}

}  // namespace gsp::io
