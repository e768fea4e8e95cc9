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

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include "gsp/error.hpp"
#include "gsp/filtering.hpp"
#include "gsp/kernel.hpp"
#include "gsp/rank_one.hpp"
#include "gsp/recovery.hpp"
#include "gsp/spectral.hpp"
#include "gsp/types.hpp"

namespace gsp {

struct SelectionResult {
  std::vector<NodeIndex> ordered_nodes;
  std::vector<double> per_step_score;
  std::string criterion;
};

enum class Criterion { AOpt, EOpt };

inline std::string to_string(Criterion c) { return c == Criterion::AOpt ? "aopt" : "eopt"; }

/// Rows of `basis` indexed by `set`.
template <typename Scalar>
Matrix<Scalar> select_rows(const Matrix<Scalar>& basis, const std::vector<NodeIndex>& set) {
  Matrix<Scalar> out(static_cast<Eigen::Index>(set.size()), basis.cols());
  for (std::size_t j = 0; j < set.size(); ++j) out.row(static_cast<Eigen::Index>(j)) = basis.row(set[j]);
  return out;
}

/// E = U_VB (U_TB^T U_TB)^{-1} U_VB^T.
template <typename Scalar>
Matrix<Scalar> error_covariance(const SpectralDecomposition<Scalar>& dec, Eigen::Index k,
                                const std::vector<NodeIndex>& set) {
  require(k >= 1 && k <= dec.size(), ErrorCode::DimensionMismatch, "bandwidth outside [1, N]");
  for (NodeIndex i : set)
    require(i >= 0 && i < dec.size(), ErrorCode::IndexOutOfRange, "node out of range");
  const Matrix<Scalar> ub = dec.low_band(k);
  const Matrix<Scalar> utb = select_rows(ub, set);
  const Matrix<Scalar> info = utb.transpose() * utb;
  const Scalar lmin = set.empty() ? Scalar(0) : min_eigenvalue<Scalar>(info);
  require(lmin > Scalar(1e-12) * std::max(Scalar(1), info.diagonal().maxCoeff()),
          ErrorCode::SingularInformationMatrix, "information matrix U_TB^T U_TB is singular");
  return ub * info.ldlt().solve(ub.transpose());
}

namespace detail {

// Scores within this relative distance count as ties; ties go to the lowest index.
inline bool improves(double score, double best, bool maximize) {
  const double tol = 1e-12 * std::max(1.0, std::abs(best));
  return maximize ? score > best + tol : score < best - tol;
}

// E-opt ranking score and objective of a candidate row block R (|T|+1 rows).
// Below K rows the information matrix R^T R is singular; candidates are then
// ranked by the smallest eigenvalue of the Gram matrix R R^T, i.e. the smallest
// nonzero eigenvalue of R^T R, while the reported objective stays 0.
template <typename Scalar>
std::pair<double, double> eopt_score(const Matrix<Scalar>& rows) {
  if (rows.rows() < rows.cols()) {
    return {static_cast<double>(min_eigenvalue<Scalar>(rows * rows.transpose())), 0.0};
  }
  const double v = static_cast<double>(min_eigenvalue<Scalar>(rows.transpose() * rows));
  return {v, v};
}

// A-opt: trace of the (pseudo)inverse of the information matrix. The nonzero
// spectrum of R^T R equals that of R R^T, so below K rows the smaller Gram
// matrix is inverted. Rank-deficient candidates score +inf.
template <typename Scalar>
double aopt_score(const Matrix<Scalar>& rows) {
  const Matrix<Scalar> gram =
      rows.rows() <= rows.cols() ? Matrix<Scalar>(rows * rows.transpose())
                                 : Matrix<Scalar>(rows.transpose() * rows);
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> solver(gram, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  const double top = static_cast<double>(ev[ev.size() - 1]);
  if (!(static_cast<double>(ev[0]) > 1e-10 * std::max(1.0, top)))
    return std::numeric_limits<double>::infinity();
  return static_cast<double>(ev.cwiseInverse().sum());
}

}  // namespace detail

/// Greedy row selection on an arbitrary N x K generator (e.g. U_VB for
/// bandlimited signals): each step adds the row maximizing lambda_min (E-opt) or
/// minimizing the trace of the inverse (A-opt) of the information matrix.
template <typename Scalar>
SelectionResult greedy_select_rows(const Matrix<Scalar>& basis, Eigen::Index m, Criterion criterion) {
  const Eigen::Index n = basis.rows();
  require(m >= 1 && m <= n, ErrorCode::BudgetTooLarge, "budget must be in [1, N]");
  SelectionResult result;
  result.criterion = to_string(criterion);
  std::vector<bool> taken(static_cast<std::size_t>(n), false);
  const bool maximize = criterion == Criterion::EOpt;
  for (Eigen::Index step = 0; step < m; ++step) {
    NodeIndex best_node = -1;
    double best_score = 0.0;
    double best_objective = 0.0;
    std::vector<NodeIndex> trial = result.ordered_nodes;
    trial.push_back(0);
    for (NodeIndex i = 0; i < n; ++i) {
      if (taken[static_cast<std::size_t>(i)]) continue;
      trial.back() = i;
      const Matrix<Scalar> rows = select_rows(basis, trial);
      double score;
      double objective;
      if (criterion == Criterion::EOpt) {
        std::tie(score, objective) = detail::eopt_score(rows);
      } else {
        score = objective = detail::aopt_score(rows);
      }
      if (best_node < 0 || detail::improves(score, best_score, maximize)) {
        best_node = i;
        best_score = score;
        best_objective = objective;
      }
    }
    taken[static_cast<std::size_t>(best_node)] = true;
    result.ordered_nodes.push_back(best_node);
    result.per_step_score.push_back(best_objective);
  }
  return result;
}

template <typename Scalar>
SelectionResult greedy_select(const SpectralDecomposition<Scalar>& dec, Eigen::Index k,
                              Eigen::Index m, Criterion criterion) {
  require(k >= 1 && k <= dec.size(), ErrorCode::DimensionMismatch, "bandwidth outside [1, N]");
  return greedy_select_rows<Scalar>(dec.low_band(k), m, criterion);
}

/// Greedy E-optimal selection for the smooth-signal system: each step adds the node
/// maximizing lambda_min(S S^T + gamma L), S S^T the 0/1 diagonal of selected nodes.
/// Each step costs one dense eigendecomposition; candidates are scored exactly
/// through the rank-one secular equation.
template <typename Scalar, typename Operator>
SelectionResult greedy_select_regularized(const Operator& l, Scalar gamma, Eigen::Index m) {
  require(gamma > Scalar(0), ErrorCode::InvalidSpec, "gamma must be positive");
  Matrix<Scalar> system = gamma * detail::to_dense<Scalar>(l);
  const Eigen::Index n = system.rows();
  require(system.cols() == n, ErrorCode::DimensionMismatch, "operator must be square");
  require(m >= 1 && m <= n, ErrorCode::BudgetTooLarge, "budget must be in [1, N]");
  SelectionResult result;
  result.criterion = "eopt-reg";
  std::vector<bool> taken(static_cast<std::size_t>(n), false);
  for (Eigen::Index step = 0; step < m; ++step) {
    Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> solver(system);
    NodeIndex best_node = -1;
    double best_score = 0.0;
    for (NodeIndex i = 0; i < n; ++i) {
      if (taken[static_cast<std::size_t>(i)]) continue;
      const double score = static_cast<double>(
          min_eigenvalue_after_unit_update<Scalar>(solver.eigenvalues(), solver.eigenvectors(), i));
      if (best_node < 0 || detail::improves(score, best_score, true)) {
        best_node = i;
        best_score = score;
      }
    }
    taken[static_cast<std::size_t>(best_node)] = true;
    system(best_node, best_node) += Scalar(1);
    result.ordered_nodes.push_back(best_node);
    result.per_step_score.push_back(best_score);
  }
  return result;
}

/// Greedy spreading of localized operators. Residual weights r (initially 1)
/// record how much of each node is still uncovered. Each step picks the node whose
/// localized operator puts the largest share of its energy on uncovered nodes,
/// argmax_i sum_n psi_i[n]^2 r[n] / ||psi_i||^2, then scales r[n] by
/// 1 - psi_i*[n]^2 / max_n psi_i*[n]^2. Nodes with psi_i = 0 score 0.
template <typename Scalar>
SelectionResult greedy_select_localized(const SpectralDecomposition<Scalar>& dec,
                                        const SpectralKernel& kernel, Eigen::Index m) {
  const Eigen::Index n = dec.size();
  require(m >= 1 && m <= n, ErrorCode::BudgetTooLarge, "budget must be in [1, N]");
  const Matrix<Scalar> energy = localized_operators(dec, kernel).cwiseAbs2();
  const Vector<Scalar> totals = energy.colwise().sum().transpose();
  Vector<Scalar> residual = Vector<Scalar>::Ones(n);
  SelectionResult result;
  result.criterion = "localized:" + kernel.name;
  std::vector<bool> taken(static_cast<std::size_t>(n), false);
  for (Eigen::Index step = 0; step < m; ++step) {
    const Vector<Scalar> scores = energy.transpose() * residual;
    NodeIndex best_node = -1;
    double best_score = 0.0;
    for (NodeIndex i = 0; i < n; ++i) {
      if (taken[static_cast<std::size_t>(i)]) continue;
      const double score =
          totals[i] > Scalar(0) ? static_cast<double>(scores[i] / totals[i]) : 0.0;
      if (best_node < 0 || detail::improves(score, best_score, true)) {
        best_node = i;
        best_score = score;
      }
    }
    taken[static_cast<std::size_t>(best_node)] = true;
    const Scalar peak = energy.col(best_node).maxCoeff();
    if (peak > Scalar(0))
      residual = residual.cwiseProduct(
          (Vector<Scalar>::Ones(n) - energy.col(best_node) / peak).cwiseMax(Scalar(0)));
    result.ordered_nodes.push_back(best_node);
    result.per_step_score.push_back(best_score);
  }
  return result;
}

/// Probabilities over nodes: nonnegative, summing to 1 within 1e-12.
struct SamplingDistribution {
  Eigen::VectorXd p;

  void validate() const {
    require(p.size() >= 1, ErrorCode::InvalidSpec, "empty distribution");
    require((p.array() >= 0.0).all() && p.allFinite(), ErrorCode::InvalidSpec,
            "probabilities must be finite and nonnegative");
    require(std::abs(p.sum() - 1.0) <= 1e-12, ErrorCode::InvalidSpec,
            "probabilities must sum to 1");
  }
};

inline SamplingDistribution uniform_distribution(Eigen::Index n) {
  return {Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n))};
}

/// p[i] = ||U_VB^T delta_i||^2 / K.
template <typename Scalar>
SamplingDistribution coherence_distribution(const SpectralDecomposition<Scalar>& dec, Eigen::Index k) {
  require(k >= 1 && k <= dec.size(), ErrorCode::DimensionMismatch, "bandwidth outside [1, N]");
  // Rows of an orthogonal matrix have unit norm.
  if (k == dec.size()) return uniform_distribution(k);
  Eigen::VectorXd p = dec.low_band(k).rowwise().squaredNorm().template cast<double>();
  p /= static_cast<double>(k);
  return {std::move(p)};
}

/// Draws m distinct nodes sequentially without replacement, renormalizing over
/// the remaining nodes at every draw. The per-step score is the renormalized
/// probability of the drawn node.
inline SelectionResult random_select(const SamplingDistribution& dist, Eigen::Index m,
                                     std::uint64_t seed) {
  dist.validate();
  const Eigen::Index support = (dist.p.array() > 0.0).count();
  require(m >= 1 && m <= support, ErrorCode::InsufficientSupport,
          "only " + std::to_string(support) + " nodes have positive probability");
  std::mt19937_64 rng(seed);
  Eigen::VectorXd weights = dist.p;
  SelectionResult result;
  result.criterion = "random";
  for (Eigen::Index step = 0; step < m; ++step) {
    const double total = weights.sum();
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
    double cumulative = 0.0;
    NodeIndex chosen = -1;
    for (Eigen::Index i = 0; i < weights.size(); ++i) {
      if (weights[i] <= 0.0) continue;
      chosen = i;
      cumulative += weights[i];
      if (u < cumulative) break;
    }
    result.ordered_nodes.push_back(chosen);
    result.per_step_score.push_back(weights[chosen] / total);
    weights[chosen] = 0.0;
  }
  return result;
}

}  // namespace gsp
