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
#include <limits>

#include <Eigen/Eigenvalues>

#include "gsp/types.hpp"

namespace gsp {

/// Smallest eigenvalue of Q diag(lambda) Q^T + e_k e_k^T given the ascending
/// eigenpairs (lambda, Q) of the unperturbed symmetric matrix.
///
/// The perturbed minimum is lambda_1 when the lowest eigenvalue is repeated
/// (gap below `cluster_tol`) or when e_k has no component along u_1; otherwise
/// it is the root of the secular equation 1 + sum_i z_i^2 / (lambda_i - mu) = 0
/// in (lambda_1, min(lambda_2, lambda_1 + 1)), z = Q^T e_k, found by bisection to
/// machine precision.
template <typename Scalar>
Scalar min_eigenvalue_after_unit_update(const Vector<Scalar>& lambda, const Matrix<Scalar>& q,
                                        Eigen::Index k, Scalar cluster_tol = Scalar(1e-12)) {
  const Eigen::Index n = lambda.size();
  const Scalar l1 = lambda[0];
  const Scalar scale = std::max(Scalar(1), std::abs(lambda[n - 1]));
  if (n > 1 && lambda[1] - l1 <= cluster_tol * scale) return l1;
  const Vector<Scalar> z = q.row(k).transpose();
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  if (z[0] * z[0] <= eps * eps) return l1;
  Scalar lo = l1;
  Scalar hi = n > 1 ? std::min(lambda[1], l1 + Scalar(1)) : l1 + Scalar(1);
  auto secular = [&](Scalar mu) {
    Scalar f = Scalar(1);
    for (Eigen::Index i = 0; i < n; ++i) f += z[i] * z[i] / (lambda[i] - mu);
    return f;
  };
  // f is increasing on (lo, hi); f -> -inf at lo.
  for (int it = 0; it < 200; ++it) {
    const Scalar mid = lo + (hi - lo) / Scalar(2);
    if (mid <= lo || mid >= hi) break;
    if (secular(mid) < Scalar(0)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / Scalar(2);
}

template <typename Scalar>
Scalar min_eigenvalue(const Matrix<Scalar>& symmetric) {
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> solver(symmetric, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()[0];
}

}  // namespace gsp
