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


#include "doctest.h"

#include <cmath>
#include <random>
#include <set>

#include "gsp/generators.hpp"
#include "gsp/kernel.hpp"
#include "gsp/selection.hpp"
#include "oracles.hpp"

using namespace gsp;
using Kind = VariationOperatorKind;

namespace {

double eopt_objective(const Eigen::MatrixXd& basis, const std::vector<NodeIndex>& set) {
  Eigen::MatrixXd rows(static_cast<Eigen::Index>(set.size()), basis.cols());
  for (std::size_t j = 0; j < set.size(); ++j) rows.row(static_cast<Eigen::Index>(j)) = basis.row(set[j]);
  return oracle::min_eigenvalue(rows.transpose() * rows);
}

double brute_force_eopt(const Eigen::MatrixXd& basis, int m) {
  double best = -1.0;
  oracle::for_each_subset(static_cast<int>(basis.rows()), m, [&](const std::vector<int>& s) {
    best = std::max(best, eopt_objective(basis, {s.begin(), s.end()}));
  });
  return best;
}

std::vector<NodeIndex> prefix(const std::vector<NodeIndex>& v, std::size_t n) {
  return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)};
}

}  // namespace

TEST_CASE("error covariance") {
  std::mt19937_64 rng(1);
  const Graph g = oracle::random_connected_graph(10, 0.4, rng);
  const auto dec = eigendecompose<double>(g, Kind::Combinatorial);
  std::vector<NodeIndex> all(10);
  std::iota(all.begin(), all.end(), 0);
  CHECK((error_covariance(dec, 10, all) - Eigen::MatrixXd::Identity(10, 10)).norm() < 1e-10);

  const std::vector<NodeIndex> set = {1, 4, 6, 9};
  const Eigen::MatrixXd e = error_covariance(dec, 3, set);
  Eigen::MatrixXd utb(4, 3);
  for (int j = 0; j < 4; ++j) utb.row(j) = dec.eigenvectors.row(set[static_cast<std::size_t>(j)]).head(3);
  const Eigen::MatrixXd ub = dec.low_band(3);
  const Eigen::MatrixXd dense = ub * (utb.transpose() * utb).inverse() * ub.transpose();
  CHECK((e - dense).norm() < 1e-10);
  CHECK(e.trace() == doctest::Approx((utb.transpose() * utb).inverse().trace()).epsilon(1e-10));

  try {
    error_covariance(dec, 3, {1, 4});
    FAIL("expected SingularInformationMatrix");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::SingularInformationMatrix);
  }
}

TEST_CASE("complete graph ties go to the lowest index") {
  const auto dec = eigendecompose<double>(gen_graph({CompleteGraph{8}, 0}), Kind::Combinatorial);
  for (auto c : {Criterion::EOpt, Criterion::AOpt}) {
    const auto r = greedy_select(dec, 1, 4, c);
    CHECK(r.ordered_nodes == std::vector<NodeIndex>{0, 1, 2, 3});
  }
}

TEST_CASE("greedy E-opt against exhaustive search") {
  std::mt19937_64 rng(2026);
  double worst_ratio = 1.0;
  for (int t = 0; t < 50; ++t) {
    const int n = 5 + static_cast<int>(rng() % 8);
    const Graph g = oracle::random_connected_graph(n, 0.35, rng);
    const auto dec = eigendecompose<double>(g, Kind::Combinatorial);
    const Eigen::MatrixXd ub = dec.low_band(3);
    const auto r = greedy_select(dec, 3, 3, Criterion::EOpt);
    const double greedy = eopt_objective(ub, r.ordered_nodes);
    const double best = brute_force_eopt(ub, 3);
    CHECK(greedy <= best + 1e-12);
    CHECK(greedy >= 0.5 * best);
    CHECK(r.per_step_score.back() == doctest::Approx(greedy).epsilon(1e-10));
    worst_ratio = std::min(worst_ratio, greedy / best);
  }
  MESSAGE("worst greedy / optimum ratio: " << worst_ratio);
}

TEST_CASE("sensor placement objective computed both ways") {
  const Graph g = gen_graph({RandomSensor{40, 5}, 8});
  const auto dec = eigendecompose<double>(g, Kind::Combinatorial);
  const auto r = greedy_select(dec, 6, 9, Criterion::EOpt);
  const Eigen::MatrixXd phi = dec.low_band(6);
  const Eigen::MatrixXd rows = select_rows(phi, r.ordered_nodes);
  const double direct = min_eigenvalue<double>(rows.transpose() * rows);
  CHECK(std::abs(r.per_step_score.back() - direct) <= 1e-12);
  CHECK(std::abs(direct - oracle::min_eigenvalue(rows.transpose() * rows)) <= 1e-12);
}

TEST_CASE("E-opt objective is non-decreasing and greedy has the prefix property") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 10; ++t) {
    const Graph g = oracle::random_connected_graph(20, 0.2, rng);
    const auto dec = eigendecompose<double>(g, Kind::Combinatorial);
    const auto l = sparse_laplacian<double>(g, Kind::Combinatorial);
    const auto e = greedy_select(dec, 4, 10, Criterion::EOpt);
    for (std::size_t i = 1; i < e.per_step_score.size(); ++i)
      CHECK(e.per_step_score[i] >= e.per_step_score[i - 1] - 1e-12);
    for (std::size_t i = 0; i < 3; ++i) CHECK(e.per_step_score[i] == 0.0);
    for (Eigen::Index m = 1; m <= 5; ++m) {
      const auto mu = static_cast<std::size_t>(m);
      CHECK(greedy_select(dec, 4, m, Criterion::EOpt).ordered_nodes == prefix(e.ordered_nodes, mu));
      CHECK(greedy_select(dec, 4, m, Criterion::AOpt).ordered_nodes ==
            prefix(greedy_select(dec, 4, 10, Criterion::AOpt).ordered_nodes, mu));
      CHECK(greedy_select_regularized(l, 0.5, m).ordered_nodes ==
            prefix(greedy_select_regularized(l, 0.5, 10).ordered_nodes, mu));
      const auto kernel = ideal_lowpass_kernel(dec.eigenvalues, 4);
      CHECK(greedy_select_localized(dec, kernel, m).ordered_nodes ==
            prefix(greedy_select_localized(dec, kernel, 10).ordered_nodes, mu));
    }
  }
}

TEST_CASE("A-opt scores the pseudoinverse trace") {
  std::mt19937_64 rng(5);
  const Graph g = oracle::random_connected_graph(15, 0.3, rng);
  const auto dec = eigendecompose<double>(g, Kind::Combinatorial);
  const auto r = greedy_select(dec, 4, 6, Criterion::AOpt);
  const Eigen::MatrixXd ub = dec.low_band(4);
  for (std::size_t m = 1; m <= 6; ++m) {
    const Eigen::MatrixXd rows = select_rows(ub, prefix(r.ordered_nodes, m));
    const Eigen::MatrixXd info = rows.transpose() * rows;
    const Eigen::MatrixXd pinv = info.completeOrthogonalDecomposition().pseudoInverse();
    CHECK(r.per_step_score[m - 1] == doctest::Approx(pinv.trace()).epsilon(1e-8));
  }
  CHECK(r.criterion == "aopt");
}

TEST_CASE("rank-one minimum eigenvalue update") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 30; ++t) {
    const int n = 3 + static_cast<int>(rng() % 12);
    const Eigen::MatrixXd b = oracle::random_matrix(n, n, rng);
    Eigen::MatrixXd a = 0.3 * b * b.transpose();
    if (t % 3 == 0) a = oracle::naive_laplacian(oracle::random_connected_graph(n, 0.4, rng));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    for (Eigen::Index k = 0; k < n; ++k) {
      Eigen::MatrixXd updated = a;
      updated(k, k) += 1.0;
      CHECK(min_eigenvalue_after_unit_update<double>(solver.eigenvalues(), solver.eigenvectors(), k) ==
            doctest::Approx(oracle::min_eigenvalue(updated)).epsilon(1e-9));
    }
  }
}

TEST_CASE("regularized E-opt") {
  std::mt19937_64 rng(7);
  const Graph g = oracle::random_connected_graph(12, 0.3, rng);
  const Eigen::MatrixXd l = oracle::naive_laplacian(g);
  const double gamma = 0.7;
  const auto full = greedy_select_regularized(l, gamma, 12);
  CHECK(full.per_step_score.back() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(oracle::min_eigenvalue(gamma * l)) < 1e-10);
  CHECK(full.per_step_score.front() > 1e-6);
  std::set<NodeIndex> distinct(full.ordered_nodes.begin(), full.ordered_nodes.end());
  CHECK(distinct.size() == 12);

  for (int t = 0; t < 20; ++t) {
    const int n = 4 + static_cast<int>(rng() % 7);
    const Graph h = oracle::random_connected_graph(n, 0.3, rng);
    const Eigen::MatrixXd lh = oracle::naive_laplacian(h);
    const auto r = greedy_select_regularized(lh, 0.5, 2);
    auto objective = [&](const std::vector<int>& s) {
      Eigen::MatrixXd m = 0.5 * lh;
      for (int i : s) m(i, i) += 1.0;
      return oracle::min_eigenvalue(m);
    };
    double best = 0.0;
    oracle::for_each_subset(n, 2, [&](const std::vector<int>& s) { best = std::max(best, objective(s)); });
    const double greedy = objective({static_cast<int>(r.ordered_nodes[0]), static_cast<int>(r.ordered_nodes[1])});
    CHECK(greedy <= best + 1e-12);
    CHECK(greedy >= 0.5 * best);
    CHECK(r.per_step_score.back() == doctest::Approx(greedy).epsilon(1e-9));
  }
  CHECK_THROWS_AS(greedy_select_regularized(l, 0.0, 2), Error);
}

TEST_CASE("localized selection") {
  const auto dec = eigendecompose<double>(gen_graph({RandomSensor{30, 5}, 3}), Kind::Combinatorial);
  CHECK(greedy_select_localized(dec, identity_kernel(), 5).ordered_nodes ==
        std::vector<NodeIndex>{0, 1, 2, 3, 4});

  const auto kernel = exp_decay_kernel(0.5);
  CHECK(greedy_select_localized(dec, kernel, 8).ordered_nodes ==
        greedy_select_localized(dec, scaled_kernel(kernel, 7.5), 8).ordered_nodes);

  const Community spec{{8, 8, 16, 32, 64, 128}, 0.8, 0.01};
  const Graph g = gen_graph({spec, 1});
  const auto labels = community_labels(spec);
  const auto cdec = eigendecompose<double>(g, Kind::Combinatorial);
  const auto r = greedy_select_localized(cdec, ideal_lowpass_kernel(cdec.eigenvalues, 10), 10);
  std::set<int> hit;
  for (NodeIndex v : r.ordered_nodes) hit.insert(labels[static_cast<std::size_t>(v)]);
  CHECK(hit.size() >= 5);
}

TEST_CASE("coherence distribution") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 20; ++t) {
    const int n = 5 + static_cast<int>(rng() % 40);
    const Graph g = oracle::random_connected_graph(n, 0.2, rng);
    auto dec = eigendecompose<double>(g, t % 2 ? Kind::SymmetricNormalized : Kind::Combinatorial);
    for (int k = 1; k <= n; k += std::max(1, n / 5)) {
      const auto p = coherence_distribution(dec, k);
      CHECK(std::abs(p.p.sum() - 1.0) <= 1e-12);
      CHECK((p.p.array() >= 0.0).all());
      auto flipped = dec;
      flipped.eigenvectors.col(0) *= -1.0;
      flipped.eigenvectors.col(k - 1) *= -1.0;
      CHECK((coherence_distribution(flipped, k).p - p.p).norm() < 1e-15);
    }
    const auto uniform = coherence_distribution(dec, n);
    CHECK((uniform.p.array() == 1.0 / n).all());
  }
  const auto p3 = eigendecompose<double>(gen_graph({PathGraph{3}, 0}), Kind::Combinatorial);
  const auto p = coherence_distribution(p3, 1);
  for (int i = 0; i < 3; ++i) CHECK(p.p[i] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("random selection") {
  const auto uniform = uniform_distribution(12);
  const auto all = random_select(uniform, 12, 99);
  std::set<NodeIndex> distinct(all.ordered_nodes.begin(), all.ordered_nodes.end());
  CHECK(distinct.size() == 12);
  CHECK(random_select(uniform, 12, 99).ordered_nodes == all.ordered_nodes);
  CHECK(random_select(uniform, 12, 100).ordered_nodes != all.ordered_nodes);
  CHECK(all.per_step_score.front() == doctest::Approx(1.0 / 12.0));
  CHECK(all.per_step_score.back() == doctest::Approx(1.0));

  SamplingDistribution sparse{Eigen::VectorXd::Zero(5)};
  sparse.p[1] = 0.5;
  sparse.p[3] = 0.5;
  try {
    random_select(sparse, 3, 1);
    FAIL("expected InsufficientSupport");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InsufficientSupport);
  }
  CHECK_THROWS_AS(random_select(SamplingDistribution{Eigen::VectorXd::Constant(3, 0.5)}, 1, 1), Error);

  // Monte-Carlo: frequency of the heavy node within a 3-sigma binomial bound.
  SamplingDistribution delta{Eigen::VectorXd::Constant(10, 0.01 / 9.0)};
  delta.p[4] = 0.99;
  delta.p /= delta.p.sum();
  const int trials = 100000;
  int hits = 0;
  for (int s = 0; s < trials; ++s) hits += random_select(delta, 1, static_cast<std::uint64_t>(s)).ordered_nodes[0] == 4;
  const double p = delta.p[4];
  const double sigma = std::sqrt(trials * p * (1.0 - p));
  CHECK(std::abs(hits - trials * p) <= 3.0 * sigma);
}
