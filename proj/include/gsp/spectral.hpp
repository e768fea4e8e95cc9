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

#include <Eigen/Eigenvalues>

#include "gsp/error.hpp"
#include "gsp/graph.hpp"
#include "gsp/types.hpp"

namespace gsp {

/// Eigenpairs of a symmetric variation operator: ascending eigenvalues and an
/// orthonormal eigenvector matrix whose columns define the GFT basis.
template <typename Scalar = double>
struct SpectralDecomposition {
  Vector<Scalar> eigenvalues;
  Matrix<Scalar> eigenvectors;
  VariationOperatorKind operator_kind = VariationOperatorKind::Combinatorial;

  NodeIndex size() const { return eigenvalues.size(); }

  /// First k eigenvectors (the low-frequency block).
  auto low_band(Eigen::Index k) const { return eigenvectors.leftCols(k); }
};

/// Flips every eigenvector so its first entry larger than 1e-8 in magnitude is positive.
template <typename Scalar>
void apply_sign_convention(Matrix<Scalar>& u) {
  for (Eigen::Index k = 0; k < u.cols(); ++k) {
    for (Eigen::Index n = 0; n < u.rows(); ++n) {
      if (std::abs(u(n, k)) > Scalar(1e-8)) {
        if (u(n, k) < Scalar(0)) u.col(k) = -u.col(k);
        break;
      }
    }
  }
}

template <typename Scalar>
SpectralDecomposition<Scalar> eigendecompose(
    const Matrix<Scalar>& op,
    VariationOperatorKind kind = VariationOperatorKind::Combinatorial) {
  require(op.rows() == op.cols(), ErrorCode::DimensionMismatch, "operator must be square");
  const Scalar asym = op.rows() ? (op - op.transpose()).cwiseAbs().maxCoeff() : Scalar(0);
  require(!(asym > Scalar(1e-10)), ErrorCode::NonSymmetric,
          "operator asymmetry " + std::to_string(static_cast<double>(asym)) + " exceeds 1e-10");
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> solver(op, Eigen::ComputeEigenvectors);
  require(solver.info() == Eigen::Success, ErrorCode::SolverDiverged,
          "symmetric eigensolver did not converge");
  SpectralDecomposition<Scalar> dec;
  dec.eigenvalues = solver.eigenvalues();
  dec.eigenvectors = solver.eigenvectors();
  dec.operator_kind = kind;
  apply_sign_convention(dec.eigenvectors);
  return dec;
}

template <typename Scalar = double>
SpectralDecomposition<Scalar> eigendecompose(const Graph& g, VariationOperatorKind kind) {
  return eigendecompose<Scalar>(build_laplacian<Scalar>(g, kind), kind);
}

template <typename Scalar, typename Derived>
Vector<Scalar> gft(const SpectralDecomposition<Scalar>& dec, const Eigen::MatrixBase<Derived>& x) {
  require(x.size() == dec.size(), ErrorCode::DimensionMismatch, "signal length differs from N");
  return dec.eigenvectors.transpose() * x;
}

template <typename Scalar, typename Derived>
Vector<Scalar> igft(const SpectralDecomposition<Scalar>& dec,
                    const Eigen::MatrixBase<Derived>& xhat) {
  require(xhat.size() == dec.size(), ErrorCode::DimensionMismatch,
          "spectrum length differs from N");
  return dec.eigenvectors * xhat;
}

enum class SignalDomain { Vertex, Spectral };

template <typename Scalar = double>
struct GraphSignal {
  Vector<Scalar> values;
  SignalDomain domain = SignalDomain::Vertex;
};

template <typename Scalar>
GraphSignal<Scalar> gft(const SpectralDecomposition<Scalar>& dec, const GraphSignal<Scalar>& x) {
  require(x.domain == SignalDomain::Vertex, ErrorCode::DimensionMismatch,
          "gft expects a vertex-domain signal");
  return {gft(dec, x.values), SignalDomain::Spectral};
}

template <typename Scalar>
GraphSignal<Scalar> igft(const SpectralDecomposition<Scalar>& dec,
                         const GraphSignal<Scalar>& xhat) {
  require(xhat.domain == SignalDomain::Spectral, ErrorCode::DimensionMismatch,
          "igft expects a spectral-domain signal");
  return {igft(dec, xhat.values), SignalDomain::Vertex};
}

}  // namespace gsp
