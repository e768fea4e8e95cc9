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

#include <complex>
#include <random>

#include "gsp/generators.hpp"
#include "gsp/kernel.hpp"
#include "gsp/sampling.hpp"
#include "gsp/spectral.hpp"
#include "oracles.hpp"

using namespace gsp;
using Kind = VariationOperatorKind;

namespace {

Graph path3() { return Graph(3, {{0, 1, 1.0}, {1, 2, 1.0}}); }

}  // namespace

TEST_CASE("vertex sampling picks nodes in set order") {
  const Graph g = path3();
  const auto dec = eigendecompose<double>(g, Kind::Combinatorial);
  const Eigen::Vector3d x(5, 6, 7);
  CHECK((vertex_sample(g, dec, VertexSampler<double>{{0, 1, 2}, {}}, x) - x).norm() == 0.0);
  CHECK((vertex_sample(g, dec, VertexSampler<double>{{2, 0}, {}}, x) - Eigen::Vector2d(7, 5)).norm() == 0.0);
}

TEST_CASE("vertex sampler validation") {
  const Graph g = path3();
  const auto dec = eigendecompose<double>(g, Kind::Combinatorial);
  const Eigen::Vector3d x(1, 2, 3);
  for (const std::vector<NodeIndex>& bad :
       {std::vector<NodeIndex>{3}, std::vector<NodeIndex>{-1}, std::vector<NodeIndex>{1, 1},
        std::vector<NodeIndex>{}, std::vector<NodeIndex>{0, 1, 2, 0}}) {
    try {
      vertex_sample(g, dec, VertexSampler<double>{bad, {}}, x);
      FAIL("expected IndexOutOfRange");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::IndexOutOfRange);
    }
  }
}

TEST_CASE("prefiltered vertex sampling") {
  const Graph g = path3();
  const Eigen::MatrixXd l = build_laplacian(g, Kind::Combinatorial);
  const auto dec = eigendecompose<double>(l, Kind::Combinatorial);
  const Eigen::Vector3d x(0.3, -1.0, 2.0);
  // Dense exp(-L/2) by Taylor series.
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(3, 3), dense = term;
  for (int k = 1; k < 80; ++k) {
    term = -0.5 * l * term / static_cast<double>(k);
    dense += term;
  }
  const Eigen::VectorXd c = vertex_sample(g, dec, VertexSampler<double>{{1}, exp_decay_kernel(2.0)}, x);
  REQUIRE(c.size() == 1);
  CHECK(std::abs(c[0] - dense.row(1).dot(x)) < 1e-12);

  PolynomialFilter<double> poly{Eigen::Vector2d(1.0, -0.25)};
  const Eigen::VectorXd cp = vertex_sample(g, dec, VertexSampler<double>{{0, 2}, poly}, x);
  const Eigen::VectorXd gx = x - 0.25 * l * x;
  CHECK(std::abs(cp[0] - gx[0]) < 1e-14);
  CHECK(std::abs(cp[1] - gx[2]) < 1e-14);
}

TEST_CASE("fold_spectrum examples") {
  const Eigen::Vector4d xhat(1, 2, 3, 4);
  CHECK((fold_spectrum(xhat, 4) - xhat).norm() == 0.0);
  CHECK((fold_spectrum(xhat, 2) - Eigen::Vector2d(4, 6)).norm() == 0.0);
  CHECK((fold_spectrum(Eigen::Vector4d(1, 2, 0, 0), 2) - Eigen::Vector2d(1, 2)).norm() == 0.0);
  try {
    fold_spectrum(xhat, 3);
    FAIL("expected NotDivisible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDivisible);
  }
  CHECK((fold_spectrum(xhat, 3, FoldPolicy::AllowPartial) - Eigen::Vector3d(5, 2, 3)).norm() == 0.0);
  CHECK((folding_matrix(2, 4) * xhat - fold_spectrum(xhat, 2)).norm() == 0.0);
  CHECK((unfold_spectrum(Eigen::Vector2d(1, 2), 4) - Eigen::Vector4d(1, 2, 1, 2)).norm() == 0.0);
}

TEST_CASE("frequency sampling with flat kernel returns bandlimited coefficients") {
  std::mt19937_64 rng(4);
  const Graph g = gen_graph({RandomSensor{64, 6}, 1});
  const auto dec = eigendecompose<double>(g, Kind::Combinatorial);
  const Eigen::VectorXd d = oracle::random_vector(16, rng);
  const Eigen::VectorXd x = dec.low_band(16) * d;
  const Eigen::VectorXd c = frequency_sample(dec, FrequencySampler{identity_kernel(), 16}, x);
  CHECK((c - d).norm() < 1e-12);

  const Eigen::VectorXd full = oracle::random_vector(64, rng);
  const Eigen::VectorXd xhat = gft(dec, full);
  const Eigen::VectorXd aliased = frequency_sample(dec, FrequencySampler{identity_kernel(), 32}, full);
  CHECK((aliased - (xhat.head(32) + xhat.tail(32))).norm() < 1e-12);
  CHECK_THROWS_AS(frequency_sample(dec, FrequencySampler{identity_kernel(), 15}, full), Error);

  const Eigen::VectorXd partial =
      frequency_sample(dec, FrequencySampler{identity_kernel(), 15, FoldPolicy::AllowPartial}, x);
  CHECK((partial.head(15) - d.head(15) - (Eigen::VectorXd::Unit(15, 0) * d[15])).norm() < 1e-12);
}

TEST_CASE("matrix views are consistent with apply and transpose") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 10; ++t) {
    const int n = 8 * (1 + static_cast<int>(rng() % 8));
    const Graph g = oracle::random_connected_graph(n, 0.2, rng);
    const auto dec = eigendecompose<double>(g, Kind::Combinatorial);
    std::vector<NodeIndex> set;
    for (NodeIndex i = 0; i < n; i += 3) set.push_back(i);
    std::shuffle(set.begin(), set.end(), rng);
    const std::vector<SamplingMatrixView<double>> views = {
        vertex_sampling_view(g, dec, VertexSampler<double>{set, {}}),
        vertex_sampling_view(g, dec, VertexSampler<double>{set, exp_decay_kernel(1.5)}),
        vertex_sampling_view(g, dec, VertexSampler<double>{set, PolynomialFilter<double>{Eigen::Vector3d(1, -0.2, 0.01)}}),
        frequency_sampling_view(dec, FrequencySampler{exp_decay_kernel(2.0), n / 4}),
        frequency_sampling_view(dec, FrequencySampler{linear_decay_kernel(dec.eigenvalues.maxCoeff()), n / 2})};
    for (const auto& view : views) {
      const Eigen::MatrixXd st = view.matrix();
      const Eigen::VectorXd x = oracle::random_vector(n, rng);
      const Eigen::VectorXd y = oracle::random_vector(view.rows(), rng);
      const Eigen::VectorXd x2 = oracle::random_vector(n, rng);
      CHECK((st * x - view.apply(x)).norm() < 1e-10);
      CHECK(std::abs(view.apply_transpose(y).dot(x) - y.dot(view.apply(x))) < 1e-10);
      CHECK((view.apply(2.0 * x - 0.5 * x2) - (2.0 * view.apply(x) - 0.5 * view.apply(x2))).norm() < 1e-10);
    }
  }
}

TEST_CASE("vertex and frequency sampling differ on generic signals") {
  std::mt19937_64 rng(6);
  const Graph g = gen_graph({RandomSensor{64, 6}, 2});
  const auto dec = eigendecompose<double>(g, Kind::Combinatorial);
  const Eigen::VectorXd x = oracle::random_vector(64, rng);
  std::vector<NodeIndex> set;
  for (NodeIndex i = 0; i < 16; ++i) set.push_back(4 * i);
  const Eigen::VectorXd cv = vertex_sample(g, dec, VertexSampler<double>{set, {}}, x);
  const Eigen::VectorXd cf = frequency_sample(dec, FrequencySampler{identity_kernel(), 16}, x);
  CHECK((cv - cf).norm() > 1e-6);
}

TEST_CASE("classical DFT decimation folds the spectrum") {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 20; ++t) {
    const Eigen::VectorXd v = oracle::random_vector(8, rng);
    std::vector<std::complex<double>> x(8), y(4);
    for (int i = 0; i < 8; ++i) x[static_cast<std::size_t>(i)] = v[i];
    for (int i = 0; i < 4; ++i) y[static_cast<std::size_t>(i)] = v[2 * i];
    const auto big = oracle::dft(x);
    const auto small = oracle::dft(y);
    Eigen::VectorXcd bigv(8);
    for (int i = 0; i < 8; ++i) bigv[i] = big[static_cast<std::size_t>(i)];
    const Eigen::VectorXcd folded = 0.5 * fold_spectrum(bigv, 4);
    for (int k = 0; k < 4; ++k) CHECK(std::abs(small[static_cast<std::size_t>(k)] - folded[k]) < 1e-12);
  }
}
