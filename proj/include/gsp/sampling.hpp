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
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "gsp/error.hpp"
#include "gsp/filtering.hpp"
#include "gsp/graph.hpp"
#include "gsp/kernel.hpp"
#include "gsp/spectral.hpp"
#include "gsp/types.hpp"

namespace gsp {

/// A linear sampling operator c = S^T x (M x N) together with its transpose,
/// for operators that are cheaper to apply than to store.
template <typename Scalar = double>
class SamplingMatrixView {
 public:
  using Map = std::function<Vector<Scalar>(const Vector<Scalar>&)>;

  SamplingMatrixView(Eigen::Index rows, Eigen::Index cols, Map apply, Map apply_transpose)
      : rows_(rows), cols_(cols), apply_(std::move(apply)),
        apply_transpose_(std::move(apply_transpose)) {}

  /// Wraps an explicit M x N matrix S^T.
  static SamplingMatrixView from_matrix(Matrix<Scalar> st) {
    const Eigen::Index rows = st.rows();
    const Eigen::Index cols = st.cols();
    auto shared = std::make_shared<const Matrix<Scalar>>(std::move(st));
    return SamplingMatrixView(
        rows, cols, [shared](const Vector<Scalar>& x) -> Vector<Scalar> { return *shared * x; },
        [shared](const Vector<Scalar>& y) -> Vector<Scalar> {
          return shared->transpose() * y;
        });
  }

  static SamplingMatrixView identity(Eigen::Index n) {
    auto id = [](const Vector<Scalar>& x) { return x; };
    return SamplingMatrixView(n, n, id, id);
  }

  Eigen::Index rows() const { return rows_; }
  Eigen::Index cols() const { return cols_; }

  Vector<Scalar> apply(const Vector<Scalar>& x) const {
    require(x.size() == cols_, ErrorCode::DimensionMismatch, "sampling input length differs from N");
    return apply_(x);
  }

  Vector<Scalar> apply_transpose(const Vector<Scalar>& y) const {
    require(y.size() == rows_, ErrorCode::DimensionMismatch, "sample length differs from M");
    return apply_transpose_(y);
  }

  /// S^T B, column by column.
  Matrix<Scalar> apply_columns(const Matrix<Scalar>& b) const {
    require(b.rows() == cols_, ErrorCode::DimensionMismatch, "operand rows differ from N");
    Matrix<Scalar> out(rows_, b.cols());
    for (Eigen::Index j = 0; j < b.cols(); ++j) out.col(j) = apply_(b.col(j));
    return out;
  }

  /// Materialized S^T.
  Matrix<Scalar> matrix() const {
    return apply_columns(Matrix<Scalar>::Identity(cols_, cols_));
  }

 private:
  Eigen::Index rows_;
  Eigen::Index cols_;
  Map apply_;
  Map apply_transpose_;
};

// ---------------------------------------------------------------------------
// Vertex-domain sampling: c = I_TV G x.

template <typename Scalar = double>
using Prefilter = std::variant<std::monostate, SpectralKernel, PolynomialFilter<Scalar>>;

/// Ordered node set T plus an optional graph filter G applied before selection.
/// c[j] pairs with sampling_set[j].
template <typename Scalar = double>
struct VertexSampler {
  std::vector<NodeIndex> sampling_set;
  Prefilter<Scalar> prefilter;

  bool has_prefilter() const { return !std::holds_alternative<std::monostate>(prefilter); }
};

template <typename Scalar>
void validate_sampler(const VertexSampler<Scalar>& vs, NodeIndex n) {
  const auto m = static_cast<NodeIndex>(vs.sampling_set.size());
  require(m >= 1 && m <= n, ErrorCode::IndexOutOfRange, "sampling set size must be in [1, N]");
  std::vector<NodeIndex> sorted = vs.sampling_set;
  std::sort(sorted.begin(), sorted.end());
  require(sorted.front() >= 0 && sorted.back() < n, ErrorCode::IndexOutOfRange,
          "sampling set index out of range");
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
          ErrorCode::IndexOutOfRange, "sampling set indices must be distinct");
}

namespace detail {

template <typename Scalar>
std::function<Vector<Scalar>(const Vector<Scalar>&)> prefilter_map(
    const Graph& g, const SpectralDecomposition<Scalar>& dec, const Prefilter<Scalar>& pre) {
  if (const auto* k = std::get_if<SpectralKernel>(&pre)) {
    auto u = std::make_shared<const Matrix<Scalar>>(dec.eigenvectors);
    const Vector<Scalar> response = kernel_response<Scalar>(*k, dec.eigenvalues);
    return [u, response](const Vector<Scalar>& x) -> Vector<Scalar> {
      return *u * response.cwiseProduct(u->transpose() * x);
    };
  }
  if (const auto* p = std::get_if<PolynomialFilter<Scalar>>(&pre)) {
    auto l = std::make_shared<const Eigen::SparseMatrix<Scalar>>(
        sparse_laplacian<Scalar>(g, dec.operator_kind));
    return [l, p = *p](const Vector<Scalar>& x) { return apply_vertex_filter(*l, p, x); };
  }
  return [](const Vector<Scalar>& x) { return x; };
}

}  // namespace detail

/// S^T = I_TV G.
template <typename Scalar>
SamplingMatrixView<Scalar> vertex_sampling_view(const Graph& g,
                                                const SpectralDecomposition<Scalar>& dec,
                                                const VertexSampler<Scalar>& vs) {
  const NodeIndex n = dec.size();
  validate_sampler(vs, n);
  auto filter = detail::prefilter_map(g, dec, vs.prefilter);
  const auto set = vs.sampling_set;
  const auto m = static_cast<Eigen::Index>(set.size());
  // G is a function of a symmetric operator, hence G^T = G.
  return SamplingMatrixView<Scalar>(
      m, n,
      [filter, set](const Vector<Scalar>& x) {
        const Vector<Scalar> gx = filter(x);
        Vector<Scalar> c(static_cast<Eigen::Index>(set.size()));
        for (std::size_t j = 0; j < set.size(); ++j) c[static_cast<Eigen::Index>(j)] = gx[set[j]];
        return c;
      },
      [filter, set, n](const Vector<Scalar>& y) {
        Vector<Scalar> scattered = Vector<Scalar>::Zero(n);
        for (std::size_t j = 0; j < set.size(); ++j)
          scattered[set[j]] = y[static_cast<Eigen::Index>(j)];
        return filter(scattered);
      });
}

template <typename Scalar, typename Derived>
Vector<Scalar> vertex_sample(const Graph& g, const SpectralDecomposition<Scalar>& dec,
                             const VertexSampler<Scalar>& vs,
                             const Eigen::MatrixBase<Derived>& x) {
  require(x.size() == dec.size(), ErrorCode::DimensionMismatch, "signal length differs from N");
  return vertex_sampling_view(g, dec, vs).apply(x);
}

// ---------------------------------------------------------------------------
// Graph-frequency sampling: c = D_samp g(Lambda) U^T x.

/// RequireDivisible enforces M | N. AllowPartial folds index i onto i mod M, so
/// the trailing N mod M modes form an incomplete last fold.
enum class FoldPolicy { RequireDivisible, AllowPartial };

inline void check_fold(Eigen::Index n, Eigen::Index m, FoldPolicy policy) {
  require(m >= 1 && m <= n, ErrorCode::NotDivisible, "fold period must be in [1, N]");
  require(policy == FoldPolicy::AllowPartial || n % m == 0, ErrorCode::NotDivisible,
          std::to_string(m) + " does not divide " + std::to_string(n));
}

/// c[j] = sum_l xhat[j + l M], i.e. D_samp = [I_M I_M ...].
template <typename Derived>
auto fold_spectrum(const Eigen::MatrixBase<Derived>& xhat, Eigen::Index m,
                   FoldPolicy policy = FoldPolicy::RequireDivisible) {
  using Scalar = typename Derived::Scalar;
  check_fold(xhat.size(), m, policy);
  Vector<Scalar> c = Vector<Scalar>::Zero(m);
  for (Eigen::Index i = 0; i < xhat.size(); ++i) c[i % m] += xhat[i];
  return c;
}

/// D_samp^T c: the M-periodic extension of c to length N.
template <typename Derived>
auto unfold_spectrum(const Eigen::MatrixBase<Derived>& c, Eigen::Index n,
                     FoldPolicy policy = FoldPolicy::RequireDivisible) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index m = c.size();
  check_fold(n, m, policy);
  Vector<Scalar> x(n);
  for (Eigen::Index i = 0; i < n; ++i) x[i] = c[i % m];
  return x;
}

template <typename Scalar = double>
Matrix<Scalar> folding_matrix(Eigen::Index m, Eigen::Index n,
                              FoldPolicy policy = FoldPolicy::RequireDivisible) {
  check_fold(n, m, policy);
  Matrix<Scalar> d = Matrix<Scalar>::Zero(m, n);
  for (Eigen::Index i = 0; i < n; ++i) d(i % m, i) = Scalar(1);
  return d;
}

struct FrequencySampler {
  SpectralKernel kernel;
  Eigen::Index ratio = 1;
  FoldPolicy policy = FoldPolicy::RequireDivisible;
};

template <typename Scalar>
SamplingMatrixView<Scalar> frequency_sampling_view(const SpectralDecomposition<Scalar>& dec,
                                                   const FrequencySampler& fs) {
  const Eigen::Index n = dec.size();
  const Eigen::Index m = fs.ratio;
  const FoldPolicy policy = fs.policy;
  check_fold(n, m, policy);
  auto u = std::make_shared<const Matrix<Scalar>>(dec.eigenvectors);
  const Vector<Scalar> response = kernel_response<Scalar>(fs.kernel, dec.eigenvalues);
  return SamplingMatrixView<Scalar>(
      m, n,
      [u, response, m, policy](const Vector<Scalar>& x) {
        return fold_spectrum(response.cwiseProduct(u->transpose() * x), m, policy);
      },
      [u, response, n, policy](const Vector<Scalar>& y) {
        return Vector<Scalar>(*u * response.cwiseProduct(unfold_spectrum(y, n, policy)));
      });
}

template <typename Scalar, typename Derived>
Vector<Scalar> frequency_sample(const SpectralDecomposition<Scalar>& dec,
                                const FrequencySampler& fs, const Eigen::MatrixBase<Derived>& x) {
  require(x.size() == dec.size(), ErrorCode::DimensionMismatch, "signal length differs from N");
  check_fold(dec.size(), fs.ratio, fs.policy);
  const Vector<Scalar> response = kernel_response<Scalar>(fs.kernel, dec.eigenvalues);
  return fold_spectrum(response.cwiseProduct(gft(dec, x)), fs.ratio, fs.policy);
}

}  // namespace gsp
