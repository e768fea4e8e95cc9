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

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>
#include <Eigen/SparseCore>

#include "gsp/cg.hpp"
#include "gsp/error.hpp"
#include "gsp/graph.hpp"
#include "gsp/rank_one.hpp"
#include "gsp/selection.hpp"
#include "gsp/spectral.hpp"
#include "gsp/types.hpp"

namespace gsp {

/// (row, column) of an observed matrix entry.
using Entry = std::pair<Eigen::Index, Eigen::Index>;

/// Double-graph-Laplacian-regularized completion of an N_r x N_c matrix.
/// `mask` is the 0/1 sampling matrix A_Omega.
template <typename Scalar = double>
struct CompletionProblem {
  Matrix<Scalar> observed;
  Matrix<Scalar> mask;
  Eigen::SparseMatrix<Scalar> row_laplacian;
  Eigen::SparseMatrix<Scalar> col_laplacian;
  Scalar alpha = Scalar(0);
  Scalar beta = Scalar(0);

  Eigen::Index rows() const { return observed.rows(); }
  Eigen::Index cols() const { return observed.cols(); }
  Eigen::Index unknowns() const { return observed.size(); }

  void validate() const {
    require(mask.rows() == rows() && mask.cols() == cols(), ErrorCode::DimensionMismatch,
            "mask shape differs from the observed matrix");
    require(row_laplacian.rows() == rows() && row_laplacian.cols() == rows(),
            ErrorCode::DimensionMismatch, "row graph size differs from N_r");
    require(col_laplacian.rows() == cols() && col_laplacian.cols() == cols(),
            ErrorCode::DimensionMismatch, "column graph size differs from N_c");
    require(alpha >= Scalar(0) && beta >= Scalar(0), ErrorCode::InvalidSpec,
            "alpha and beta must be nonnegative");
    require(((mask.array() == Scalar(0)) || (mask.array() == Scalar(1))).all(),
            ErrorCode::InvalidSpec, "mask entries must be 0 or 1");
  }
};

template <typename Scalar = double>
Matrix<Scalar> mask_from_entries(Eigen::Index rows, Eigen::Index cols,
                                 const std::vector<Entry>& entries) {
  Matrix<Scalar> mask = Matrix<Scalar>::Zero(rows, cols);
  for (const auto& [i, j] : entries) {
    require(i >= 0 && i < rows && j >= 0 && j < cols, ErrorCode::IndexOutOfRange,
            "mask entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    mask(i, j) = Scalar(1);
  }
  return mask;
}

/// Observed entries in row-major order.
template <typename Scalar>
std::vector<Entry> entries_from_mask(const Matrix<Scalar>& mask) {
  std::vector<Entry> out;
  for (Eigen::Index i = 0; i < mask.rows(); ++i)
    for (Eigen::Index j = 0; j < mask.cols(); ++j)
      if (mask(i, j) != Scalar(0)) out.emplace_back(i, j);
  return out;
}

template <typename Scalar>
CompletionProblem<Scalar> make_completion_problem(
    Matrix<Scalar> observed, Matrix<Scalar> mask, const Graph& row_graph, const Graph& col_graph,
    Scalar alpha, Scalar beta, VariationOperatorKind kind = VariationOperatorKind::Combinatorial) {
  CompletionProblem<Scalar> prob{std::move(observed), std::move(mask),
                                 sparse_laplacian<Scalar>(row_graph, kind),
                                 sparse_laplacian<Scalar>(col_graph, kind), alpha, beta};
  prob.validate();
  return prob;
}

/// (1/2)||A o (X - Y)||_F^2 + (alpha/2) tr(X^T L_r X) + (beta/2) tr(X L_c X^T).
template <typename Scalar>
Scalar dglr_objective(const Matrix<Scalar>& x, const CompletionProblem<Scalar>& prob) {
  require(x.rows() == prob.rows() && x.cols() == prob.cols(), ErrorCode::DimensionMismatch,
          "X shape differs from Y");
  const Scalar fit = prob.mask.cwiseProduct(x - prob.observed).squaredNorm();
  const Scalar row_term = (x.transpose() * (prob.row_laplacian * x)).trace();
  const Scalar col_term = (x * (prob.col_laplacian * x.transpose())).trace();
  return (fit + prob.alpha * row_term + prob.beta * col_term) / Scalar(2);
}

/// A o (X - Y) + alpha L_r X + beta X L_c.
template <typename Scalar>
Matrix<Scalar> dglr_gradient(const Matrix<Scalar>& x, const CompletionProblem<Scalar>& prob) {
  require(x.rows() == prob.rows() && x.cols() == prob.cols(), ErrorCode::DimensionMismatch,
          "X shape differs from Y");
  return prob.mask.cwiseProduct(x - prob.observed) + prob.alpha * (prob.row_laplacian * x) +
         prob.beta * (x * prob.col_laplacian);
}

/// (diag(vec A) + alpha I (x) L_r + beta L_c (x) I) v, with v the column-major
/// vectorization of an N_r x N_c matrix V; evaluated as
/// vec(A o V) + alpha vec(L_r V) + beta vec(V L_c).
template <typename Scalar>
Vector<Scalar> apply_system(const CompletionProblem<Scalar>& prob, const Vector<Scalar>& v) {
  require(v.size() == prob.unknowns(), ErrorCode::DimensionMismatch,
          "vector length differs from N_r * N_c");
  const Eigen::Map<const Matrix<Scalar>> mat(v.data(), prob.rows(), prob.cols());
  Vector<Scalar> out(v.size());
  Eigen::Map<Matrix<Scalar>> res(out.data(), prob.rows(), prob.cols());
  res = prob.mask.cwiseProduct(mat);
  if (prob.alpha != Scalar(0)) res += prob.alpha * (prob.row_laplacian * mat);
  if (prob.beta != Scalar(0)) res += prob.beta * (mat * prob.col_laplacian);
  return out;
}

/// vec(A o Y).
template <typename Scalar>
Vector<Scalar> system_rhs(const CompletionProblem<Scalar>& prob) {
  const Matrix<Scalar> masked = prob.mask.cwiseProduct(prob.observed);
  return Eigen::Map<const Vector<Scalar>>(masked.data(), masked.size());
}

/// Dense coefficient matrix, built column by column from apply_system.
template <typename Scalar>
Matrix<Scalar> materialize_system(const CompletionProblem<Scalar>& prob) {
  const Eigen::Index n = prob.unknowns();
  Matrix<Scalar> out(n, n);
  Vector<Scalar> e = Vector<Scalar>::Zero(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    e[k] = Scalar(1);
    out.col(k) = apply_system(prob, e);
    e[k] = Scalar(0);
  }
  return out;
}

template <typename Scalar = double>
struct CompletionResult {
  Matrix<Scalar> x;
  int iterations = 0;
  Scalar relative_residual = Scalar(0);
};

/// Solves the normal equations of dglr_objective by CG from X = 0. Raises
/// SingularSystem when CG meets a zero-curvature direction (the right-hand side
/// reaches the null space) and SolverDiverged when max_iter is exhausted.
/// `observe(iteration, vec_x)` sees every iterate. max_iter <= 0 means 10 N_r N_c.
template <typename Scalar, typename Observer = NoObserver>
CompletionResult<Scalar> dglr_solve(const CompletionProblem<Scalar>& prob, Scalar tol,
                                    int max_iter = 0, Observer&& observe = {}) {
  prob.validate();
  if (max_iter <= 0) max_iter = static_cast<int>(10 * prob.unknowns());
  const Vector<Scalar> rhs = system_rhs(prob);
  auto op = [&prob](const Vector<Scalar>& v) { return apply_system(prob, v); };
  auto cg = conjugate_gradient<Scalar>(op, rhs, Vector<Scalar>::Zero(prob.unknowns()), tol, max_iter,
                                       std::forward<Observer>(observe));
  require(cg.status != CgStatus::Breakdown, ErrorCode::SingularSystem,
          "system is singular along the right-hand side (relative residual " +
              std::to_string(static_cast<double>(cg.relative_residual)) + ")");
  require(cg.status == CgStatus::Converged, ErrorCode::SolverDiverged,
          "CG did not reach tolerance in " + std::to_string(max_iter) + " iterations");
  CompletionResult<Scalar> result;
  result.x = Eigen::Map<const Matrix<Scalar>>(cg.x.data(), prob.rows(), prob.cols());
  result.iterations = cg.iterations;
  result.relative_residual = cg.relative_residual;
  return result;
}

/// Entries in selection order plus the criterion value after each pick.
struct EntrySelection {
  std::vector<Entry> entries;
  std::vector<double> per_step_score;
};

/// Greedy E-optimal entry sampling: each step adds the entry maximizing
/// lambda_min(diag(vec A) + alpha I (x) L_r + beta L_c (x) I). Ties go to the
/// first entry in row-major order.
template <typename Scalar = double>
EntrySelection active_sample_greedy(const Graph& row_graph, const Graph& col_graph, Scalar alpha,
                                    Scalar beta, Eigen::Index budget) {
  const Eigen::Index nr = row_graph.node_count();
  const Eigen::Index nc = col_graph.node_count();
  require(budget >= 1, ErrorCode::InvalidSpec, "budget must be positive");
  require(budget <= nr * nc, ErrorCode::BudgetTooLarge,
          "budget " + std::to_string(budget) + " exceeds " + std::to_string(nr * nc) + " entries");
  CompletionProblem<Scalar> prob = make_completion_problem<Scalar>(
      Matrix<Scalar>::Zero(nr, nc), Matrix<Scalar>::Zero(nr, nc), row_graph, col_graph, alpha, beta);
  Matrix<Scalar> system = materialize_system(prob);
  std::vector<bool> taken(static_cast<std::size_t>(nr * nc), false);
  EntrySelection result;
  for (Eigen::Index step = 0; step < budget; ++step) {
    Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> solver(system);
    Eigen::Index best_i = -1;
    Eigen::Index best_j = -1;
    double best_score = 0.0;
    for (Eigen::Index i = 0; i < nr; ++i) {
      for (Eigen::Index j = 0; j < nc; ++j) {
        const Eigen::Index k = i + j * nr;
        if (taken[static_cast<std::size_t>(k)]) continue;
        const double score = static_cast<double>(min_eigenvalue_after_unit_update<Scalar>(
            solver.eigenvalues(), solver.eigenvectors(), k));
        if (best_i < 0 || detail::improves(score, best_score, true)) {
          best_i = i;
          best_j = j;
          best_score = score;
        }
      }
    }
    const Eigen::Index k = best_i + best_j * nr;
    taken[static_cast<std::size_t>(k)] = true;
    system(k, k) += Scalar(1);
    result.entries.emplace_back(best_i, best_j);
    result.per_step_score.push_back(best_score);
  }
  return result;
}

/// Selects k_rows rows and k_cols columns independently by greedy E-optimal
/// bandlimited selection on each graph and samples their Cartesian product,
/// row-major with rows and columns in selection order. per_step_score is left
/// empty: entries are not chosen one at a time.
template <typename Scalar = double>
EntrySelection bl_cross_sample(const Graph& row_graph, const Graph& col_graph, Eigen::Index k_rows,
                               Eigen::Index k_cols,
                               VariationOperatorKind kind = VariationOperatorKind::Combinatorial) {
  require(k_rows >= 1 && k_rows <= row_graph.node_count(), ErrorCode::InvalidSpec,
          "row bandwidth outside [1, N_r]");
  require(k_cols >= 1 && k_cols <= col_graph.node_count(), ErrorCode::InvalidSpec,
          "column bandwidth outside [1, N_c]");
  const auto rows = greedy_select(eigendecompose<Scalar>(row_graph, kind), k_rows, k_rows,
                                  Criterion::EOpt);
  const auto cols = greedy_select(eigendecompose<Scalar>(col_graph, kind), k_cols, k_cols,
                                  Criterion::EOpt);
  EntrySelection result;
  for (NodeIndex i : rows.ordered_nodes)
    for (NodeIndex j : cols.ordered_nodes) result.entries.emplace_back(i, j);
  return result;
}

}  // namespace gsp
