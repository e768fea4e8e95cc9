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
#include <optional>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <Eigen/SVD>
#include <Eigen/SparseCore>

#include "gsp/cg.hpp"
#include "gsp/error.hpp"
#include "gsp/filtering.hpp"
#include "gsp/graph.hpp"
#include "gsp/kernel.hpp"
#include "gsp/sampling.hpp"
#include "gsp/spectral.hpp"
#include "gsp/types.hpp"

namespace gsp {

// ---------------------------------------------------------------------------
// Signal models x = A d.

/// Span of the first k eigenvectors.
struct Bandlimited {
  Eigen::Index k = 1;
};

/// Column i is sum_j a_i(lambda_j) u_j.
struct SpectralShapes {
  std::vector<SpectralKernel> kernels;
};

/// Periodic graph spectrum: A = U a(Lambda) D^T with D the k-periodic folding
/// matrix, so x_hat[i] = a(lambda_i) d[i mod k].
struct PeriodicSpectrum {
  SpectralKernel generator;
  Eigen::Index k = 1;
  FoldPolicy policy = FoldPolicy::RequireDivisible;
};

/// x is constant on each cell; cell_of_node[n] in [0, cells).
struct PiecewiseConstant {
  std::vector<Eigen::Index> cell_of_node;
  Eigen::Index cells = 0;
};

using SubspaceModel = std::variant<Bandlimited, SpectralShapes, PeriodicSpectrum, PiecewiseConstant>;

inline Eigen::Index model_dimension(const SubspaceModel& m) {
  struct {
    Eigen::Index operator()(const Bandlimited& b) const { return b.k; }
    Eigen::Index operator()(const SpectralShapes& s) const {
      return static_cast<Eigen::Index>(s.kernels.size());
    }
    Eigen::Index operator()(const PeriodicSpectrum& p) const { return p.k; }
    Eigen::Index operator()(const PiecewiseConstant& p) const { return p.cells; }
  } visitor;
  return std::visit(visitor, m);
}

/// Cells of a piecewise-constant partition whose induced subgraph is disconnected.
inline std::vector<Eigen::Index> disconnected_cells(const Graph& g, const PiecewiseConstant& p) {
  std::vector<Eigen::Index> bad;
  for (Eigen::Index cell = 0; cell < p.cells; ++cell) {
    std::vector<NodeIndex> members;
    std::vector<NodeIndex> local(p.cell_of_node.size(), -1);
    for (std::size_t n = 0; n < p.cell_of_node.size(); ++n) {
      if (p.cell_of_node[n] == cell) {
        local[n] = static_cast<NodeIndex>(members.size());
        members.push_back(static_cast<NodeIndex>(n));
      }
    }
    if (members.size() <= 1) continue;
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
      const auto lu = local[static_cast<std::size_t>(e.u)];
      const auto lv = local[static_cast<std::size_t>(e.v)];
      if (lu >= 0 && lv >= 0) edges.push_back({lu, lv, e.weight});
    }
    if (component_count(Graph(static_cast<NodeIndex>(members.size()), edges)) > 1)
      bad.push_back(cell);
  }
  return bad;
}

template <typename Scalar>
Matrix<Scalar> build_generator(const SpectralDecomposition<Scalar>& dec, const SubspaceModel& model) {
  const Eigen::Index n = dec.size();
  const Eigen::Index k = model_dimension(model);
  require(k >= 1 && k <= n, ErrorCode::ModelInvalid,
          "model dimension " + std::to_string(k) + " outside [1, N]");

  if (std::holds_alternative<Bandlimited>(model)) return dec.low_band(k);

  if (const auto* shapes = std::get_if<SpectralShapes>(&model)) {
    Matrix<Scalar> a(n, k);
    for (Eigen::Index i = 0; i < k; ++i)
      a.col(i) = dec.eigenvectors *
                 kernel_response<Scalar>(shapes->kernels[static_cast<std::size_t>(i)], dec.eigenvalues);
    return a;
  }

  if (const auto* pgs = std::get_if<PeriodicSpectrum>(&model)) {
    require(pgs->policy == FoldPolicy::AllowPartial || n % k == 0, ErrorCode::ModelInvalid,
            "periodic spectrum model needs K | N");
    const Vector<Scalar> response = kernel_response<Scalar>(pgs->generator, dec.eigenvalues);
    Matrix<Scalar> a = Matrix<Scalar>::Zero(n, k);
    for (Eigen::Index i = 0; i < n; ++i) a.col(i % k) += response[i] * dec.eigenvectors.col(i);
    return a;
  }

  const auto& pwc = std::get<PiecewiseConstant>(model);
  require(static_cast<Eigen::Index>(pwc.cell_of_node.size()) == n, ErrorCode::ModelInvalid,
          "partition must label every node");
  Matrix<Scalar> a = Matrix<Scalar>::Zero(n, k);
  for (Eigen::Index node = 0; node < n; ++node) {
    const Eigen::Index cell = pwc.cell_of_node[static_cast<std::size_t>(node)];
    require(cell >= 0 && cell < k, ErrorCode::ModelInvalid, "partition cell out of range");
    a(node, cell) = Scalar(1);
  }
  for (Eigen::Index cell = 0; cell < k; ++cell)
    require(a.col(cell).sum() > Scalar(0), ErrorCode::ModelInvalid,
            "partition cell " + std::to_string(cell) + " is empty");
  return a;
}

template <typename Scalar, typename Derived>
Vector<Scalar> synthesize(const Matrix<Scalar>& a, const Eigen::MatrixBase<Derived>& d) {
  require(a.cols() == d.size(), ErrorCode::DimensionMismatch, "coefficient length differs from K");
  return a * d;
}

// ---------------------------------------------------------------------------
// Generalized recovery x~ = A (S^T A)^+ c.

/// Moore-Penrose pseudoinverse; singular values below rel_tol * sigma_max are dropped.
template <typename Scalar>
Matrix<Scalar> pseudo_inverse(const Matrix<Scalar>& b, Scalar rel_tol = Scalar(1e-10)) {
  if (b.size() == 0) return Matrix<Scalar>::Zero(b.cols(), b.rows());
  Eigen::JacobiSVD<Matrix<Scalar>> svd(b, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  const Scalar cutoff = rel_tol * (s.size() ? s[0] : Scalar(0));
  Vector<Scalar> inv = Vector<Scalar>::Zero(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s[i] > cutoff && s[i] > Scalar(0)) inv[i] = Scalar(1) / s[i];
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
}

/// Smallest of the K singular values of an M x K matrix; 0 when M < K.
template <typename Scalar>
Scalar smallest_singular_value(const Matrix<Scalar>& b) {
  if (b.rows() < b.cols() || b.cols() == 0) return Scalar(0);
  Eigen::JacobiSVD<Matrix<Scalar>> svd(b);
  return svd.singularValues()[svd.singularValues().size() - 1];
}

template <typename Scalar = double>
struct DsCondition {
  bool held = false;
  Scalar smallest_singular_value = Scalar(0);
};

template <typename Scalar>
DsCondition<Scalar> check_ds_condition(const Matrix<Scalar>& a, const SamplingMatrixView<Scalar>& s) {
  require(a.rows() == s.cols(), ErrorCode::DimensionMismatch, "generator rows differ from N");
  const Scalar sigma = smallest_singular_value<Scalar>(s.apply_columns(a));
  return {sigma > Scalar(1e-8), sigma};
}

template <typename Scalar = double>
struct RecoveryReport {
  Vector<Scalar> reconstruction;
  Scalar residual_norm = Scalar(0);
  bool ds_condition_held = false;
  Scalar smallest_singular_value = Scalar(0);
};

/// Perfect recovery when the DS condition holds; least-squares otherwise.
template <typename Scalar>
RecoveryReport<Scalar> recover(const Matrix<Scalar>& a, const SamplingMatrixView<Scalar>& s,
                               const Vector<Scalar>& c) {
  require(a.rows() == s.cols(), ErrorCode::DimensionMismatch, "generator rows differ from N");
  require(c.size() == s.rows(), ErrorCode::DimensionMismatch, "sample length differs from M");
  const Matrix<Scalar> sa = s.apply_columns(a);
  RecoveryReport<Scalar> report;
  report.reconstruction = a * (pseudo_inverse<Scalar>(sa) * c);
  report.residual_norm = (s.apply(report.reconstruction) - c).norm();
  report.smallest_singular_value = smallest_singular_value<Scalar>(sa);
  report.ds_condition_held = report.smallest_singular_value > Scalar(1e-8);
  return report;
}

/// Correction filter h(lambda_i) = 1 / R(lambda_i) for i < K, where
/// R(lambda_i) = sum_l g(lambda_{i+lK}) a(lambda_{i+lK}); h = 0 where |R| <= 1e-12.
template <typename Scalar, typename Derived>
Vector<Scalar> pgs_correction_kernel(const SpectralKernel& g, const SpectralKernel& a,
                                     const Eigen::MatrixBase<Derived>& eigenvalues, Eigen::Index k,
                                     FoldPolicy policy = FoldPolicy::RequireDivisible) {
  const Vector<Scalar> lambdas = eigenvalues.template cast<Scalar>();
  const Vector<Scalar> product =
      kernel_response<Scalar>(g, lambdas).cwiseProduct(kernel_response<Scalar>(a, lambdas));
  const Vector<Scalar> folded = fold_spectrum(product, k, policy);
  Vector<Scalar> h(k);
  for (Eigen::Index i = 0; i < k; ++i)
    h[i] = std::abs(folded[i]) <= Scalar(1e-12) ? Scalar(0) : Scalar(1) / folded[i];
  return h;
}

/// Recovery of a periodic-spectrum signal from frequency samples with fold period
/// K, by diagonal correction in the graph frequency domain: x~ = A (h o c).
template <typename Scalar>
Vector<Scalar> recover_pgs(const SpectralDecomposition<Scalar>& dec, const PeriodicSpectrum& model,
                           const SpectralKernel& sampling_kernel, const Vector<Scalar>& c) {
  require(c.size() == model.k, ErrorCode::DimensionMismatch,
          "correction filtering needs M = K samples");
  const Vector<Scalar> h = pgs_correction_kernel<Scalar>(sampling_kernel, model.generator,
                                                         dec.eigenvalues, model.k, model.policy);
  return build_generator(dec, SubspaceModel{model}) * h.cwiseProduct(c);
}

/// x~ = U_VB (U_TB)^+ c.
template <typename Scalar>
Vector<Scalar> recover_bandlimited_vertex(const SpectralDecomposition<Scalar>& dec, Eigen::Index k,
                                          const std::vector<NodeIndex>& set,
                                          const Vector<Scalar>& c) {
  require(k >= 1 && k <= dec.size(), ErrorCode::DimensionMismatch, "bandwidth outside [1, N]");
  require(static_cast<Eigen::Index>(set.size()) == c.size(), ErrorCode::DimensionMismatch,
          "sample count differs from sampling set size");
  require(c.size() >= k, ErrorCode::DimensionMismatch, "need at least K samples");
  Matrix<Scalar> utb(c.size(), k);
  for (std::size_t j = 0; j < set.size(); ++j) {
    require(set[j] >= 0 && set[j] < dec.size(), ErrorCode::DimensionMismatch,
            "sampling set index out of range");
    utb.row(static_cast<Eigen::Index>(j)) = dec.eigenvectors.row(set[j]).head(k);
  }
  return dec.low_band(k) * (pseudo_inverse<Scalar>(utb) * c);
}

/// Prefiltered variant: the pseudoinverse argument becomes G_TV U_VB.
template <typename Scalar>
Vector<Scalar> recover_bandlimited_vertex(const Graph& g, const SpectralDecomposition<Scalar>& dec,
                                          Eigen::Index k, const VertexSampler<Scalar>& vs,
                                          const Vector<Scalar>& c) {
  require(k >= 1 && k <= dec.size(), ErrorCode::DimensionMismatch, "bandwidth outside [1, N]");
  require(static_cast<Eigen::Index>(vs.sampling_set.size()) == c.size(),
          ErrorCode::DimensionMismatch, "sample count differs from sampling set size");
  require(c.size() >= k, ErrorCode::DimensionMismatch, "need at least K samples");
  const Matrix<Scalar> ub = dec.low_band(k);
  const Matrix<Scalar> gtb = vertex_sampling_view(g, dec, vs).apply_columns(ub);
  return ub * (pseudo_inverse<Scalar>(gtb) * c);
}

namespace detail {

template <typename Scalar, typename Operator>
Matrix<Scalar> to_dense(const Operator& l) {
  if constexpr (std::is_base_of_v<Eigen::SparseMatrixBase<Operator>, Operator>) {
    return Matrix<Scalar>(l.toDense());
  } else {
    return Matrix<Scalar>(l);
  }
}

}  // namespace detail

/// x* = (S S^T + gamma L)^{-1} S c by conjugate gradients (relative tolerance
/// 1e-10, at most 10 N iterations). For N <= 200 an unconverged run falls back
/// to a dense LDL^T solve; otherwise SolverDiverged is raised.
template <typename Scalar, typename Operator>
Vector<Scalar> regularized_recover(const SamplingMatrixView<Scalar>& s, const Vector<Scalar>& c,
                                   const Operator& l, Scalar gamma) {
  require(gamma > Scalar(0), ErrorCode::InvalidSpec, "gamma must be positive");
  require(l.rows() == s.cols() && l.cols() == s.cols(), ErrorCode::DimensionMismatch,
          "operator size differs from N");
  const Eigen::Index n = s.cols();
  const Vector<Scalar> rhs = s.apply_transpose(c);
  auto op = [&](const Vector<Scalar>& x) -> Vector<Scalar> {
    return s.apply_transpose(s.apply(x)) + gamma * (l * x);
  };
  auto cg = conjugate_gradient<Scalar>(op, rhs, Vector<Scalar>::Zero(n), Scalar(1e-10),
                                       static_cast<int>(10 * n));
  if (cg.status == CgStatus::Converged) return cg.x;
  require(n <= 200, ErrorCode::SolverDiverged,
          "CG stopped after " + std::to_string(cg.iterations) + " iterations at relative residual " +
              std::to_string(static_cast<double>(cg.relative_residual)));
  const Matrix<Scalar> st = s.matrix();
  const Matrix<Scalar> system = st.transpose() * st + gamma * detail::to_dense<Scalar>(l);
  Eigen::LDLT<Matrix<Scalar>> ldlt(system);
  require(ldlt.info() == Eigen::Success && ldlt.isPositive(), ErrorCode::SolverDiverged,
          "regularized system is not positive definite");
  return ldlt.solve(rhs);
}

}  // namespace gsp
