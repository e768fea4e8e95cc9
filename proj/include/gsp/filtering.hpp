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
#include <numbers>
#include <random>

#include <Eigen/Core>

#include "gsp/error.hpp"
#include "gsp/kernel.hpp"
#include "gsp/spectral.hpp"
#include "gsp/types.hpp"

namespace gsp {

/// sum_p c_p L^p.
template <typename Scalar = double>
struct PolynomialFilter {
  Vector<Scalar> coefficients;

  Eigen::Index order() const { return coefficients.size() - 1; }
};

/// Applies the polynomial with P matrix-vector products; output at node n only
/// depends on its P-hop neighbourhood. `Operator` may be dense or sparse.
template <typename Operator, typename Scalar, typename Derived>
Vector<Scalar> apply_vertex_filter(const Operator& l, const PolynomialFilter<Scalar>& f,
                                   const Eigen::MatrixBase<Derived>& x) {
  require(l.rows() == l.cols() && l.cols() == x.size(), ErrorCode::DimensionMismatch,
          "operator and signal sizes differ");
  require(f.coefficients.size() >= 1, ErrorCode::DimensionMismatch,
          "polynomial filter needs at least one coefficient");
  Vector<Scalar> power = x;
  Vector<Scalar> y = f.coefficients[0] * power;
  for (Eigen::Index p = 1; p < f.coefficients.size(); ++p) {
    power = l * power;
    y += f.coefficients[p] * power;
  }
  return y;
}

template <typename Scalar, typename Derived>
Vector<Scalar> apply_spectral_filter(const SpectralDecomposition<Scalar>& dec,
                                     const SpectralKernel& k,
                                     const Eigen::MatrixBase<Derived>& x) {
  require(x.size() == dec.size(), ErrorCode::DimensionMismatch, "signal length differs from N");
  const Vector<Scalar> response = kernel_response<Scalar>(k, dec.eigenvalues);
  return dec.eigenvectors * response.cwiseProduct(dec.eigenvectors.transpose() * x);
}

/// Dense U g(Lambda) U^T.
template <typename Scalar>
Matrix<Scalar> spectral_filter_matrix(const SpectralDecomposition<Scalar>& dec,
                                      const SpectralKernel& k) {
  const Vector<Scalar> response = kernel_response<Scalar>(k, dec.eigenvalues);
  return dec.eigenvectors * response.asDiagonal() * dec.eigenvectors.transpose();
}

/// Chebyshev series sum_k coefficients[k] T_k(2 lambda / lambda_max - 1) on
/// [0, lambda_max]. The constant term is stored already halved.
template <typename Scalar = double>
struct ChebyshevApprox {
  Vector<Scalar> coefficients;
  Scalar lambda_max = Scalar(0);

  Eigen::Index order() const { return coefficients.size() - 1; }

  Scalar operator()(Scalar lambda) const {
    const Scalar t = Scalar(2) * lambda / lambda_max - Scalar(1);
    Scalar prev = Scalar(1);
    Scalar cur = t;
    Scalar acc = coefficients[0];
    if (coefficients.size() > 1) acc += coefficients[1] * cur;
    for (Eigen::Index k = 2; k < coefficients.size(); ++k) {
      const Scalar next = Scalar(2) * t * cur - prev;
      acc += coefficients[k] * next;
      prev = cur;
      cur = next;
    }
    return acc;
  }
};

/// Interpolates k at the order+1 Chebyshev-Gauss nodes mapped onto [0, lambda_max].
template <typename Scalar = double>
ChebyshevApprox<Scalar> chebyshev_fit(const SpectralKernel& k, Scalar lambda_max, int order) {
  require(order >= 0, ErrorCode::InvalidSpec, "Chebyshev order must be nonnegative");
  require(lambda_max > Scalar(0), ErrorCode::InvalidSpec, "lambda_max must be positive");
  const int nodes = order + 1;
  Vector<Scalar> samples(nodes);
  Vector<Scalar> theta(nodes);
  for (int j = 0; j < nodes; ++j) {
    theta[j] = std::numbers::pi_v<Scalar> * (Scalar(j) + Scalar(0.5)) / Scalar(nodes);
    const Scalar lambda = (std::cos(theta[j]) + Scalar(1)) * lambda_max / Scalar(2);
    const double value = k(static_cast<double>(lambda));
    require(std::isfinite(value), ErrorCode::NonFiniteKernel,
            "kernel '" + k.name + "' is not finite at lambda=" +
                std::to_string(static_cast<double>(lambda)));
    samples[j] = static_cast<Scalar>(value);
  }
  ChebyshevApprox<Scalar> approx;
  approx.lambda_max = lambda_max;
  approx.coefficients.resize(nodes);
  for (int m = 0; m < nodes; ++m) {
    Scalar acc = Scalar(0);
    for (int j = 0; j < nodes; ++j) acc += samples[j] * std::cos(Scalar(m) * theta[j]);
    approx.coefficients[m] = Scalar(2) * acc / Scalar(nodes);
  }
  approx.coefficients[0] /= Scalar(2);
  return approx;
}

/// Largest eigenvalue of a positive semidefinite operator by power iteration,
/// stopping once the Rayleigh quotient changes by less than `tol` (relative).
/// The start vector is a fixed pseudo-random draw, so the result is reproducible.
template <typename Operator>
double estimate_lambda_max(const Operator& l, double tol = 1e-6, int max_iter = 100000) {
  using Scalar = typename Operator::Scalar;
  const Eigen::Index n = l.rows();
  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> normal;
  Vector<Scalar> v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = static_cast<Scalar>(normal(rng));
  v.normalize();
  double rayleigh = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    Vector<Scalar> w = l * v;
    const double next = static_cast<double>(v.dot(w));
    const double norm = static_cast<double>(w.norm());
    if (norm == 0.0) return 0.0;
    v = w / static_cast<Scalar>(norm);
    if (it > 0 && std::abs(next - rayleigh) <= tol * std::abs(next)) return next;
    rayleigh = next;
  }
  return rayleigh;
}

/// Interval bound for Chebyshev filtering: power-iteration estimate inflated by 1%.
template <typename Operator>
double chebyshev_interval(const Operator& l) {
  return 1.01 * estimate_lambda_max(l);
}

/// Evaluates the Chebyshev series of `l` applied to x by the three-term recurrence,
/// O(P(|E| + N)) for sparse `l`.
template <typename Operator, typename Scalar, typename Derived>
Vector<Scalar> chebyshev_apply(const Operator& l, const ChebyshevApprox<Scalar>& a,
                               const Eigen::MatrixBase<Derived>& x) {
  require(l.rows() == l.cols() && l.cols() == x.size(), ErrorCode::DimensionMismatch,
          "operator and signal sizes differ");
  const double estimate = estimate_lambda_max(l);
  require(estimate <= static_cast<double>(a.lambda_max) * (1.0 + 1e-9),
          ErrorCode::IntervalTooSmall,
          "approximation interval [0, " + std::to_string(static_cast<double>(a.lambda_max)) +
              "] does not cover lambda_max ~ " + std::to_string(estimate));
  const Scalar scale = Scalar(2) / a.lambda_max;
  Vector<Scalar> prev = x;
  Vector<Scalar> y = a.coefficients[0] * prev;
  if (a.coefficients.size() == 1) return y;
  Vector<Scalar> cur = scale * (l * prev) - prev;
  y += a.coefficients[1] * cur;
  for (Eigen::Index k = 2; k < a.coefficients.size(); ++k) {
    Vector<Scalar> next = Scalar(2) * (scale * (l * cur) - cur) - prev;
    y += a.coefficients[k] * next;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return y;
}

/// psi_{g,i}[n] = sqrt(N) sum_k g(lambda_k) u_k[i] u_k[n].
template <typename Scalar>
Vector<Scalar> localized_operator(const SpectralDecomposition<Scalar>& dec, const SpectralKernel& k,
                                  NodeIndex i) {
  require(i >= 0 && i < dec.size(), ErrorCode::IndexOutOfRange,
          "node " + std::to_string(i) + " out of range");
  const Vector<Scalar> response = kernel_response<Scalar>(k, dec.eigenvalues);
  const Vector<Scalar> row = dec.eigenvectors.row(i).transpose();
  return std::sqrt(static_cast<Scalar>(dec.size())) *
         (dec.eigenvectors * response.cwiseProduct(row));
}

/// All localized operators as columns: sqrt(N) U g(Lambda) U^T.
template <typename Scalar>
Matrix<Scalar> localized_operators(const SpectralDecomposition<Scalar>& dec,
                                   const SpectralKernel& k) {
  return std::sqrt(static_cast<Scalar>(dec.size())) * spectral_filter_matrix(dec, k);
}

}  // namespace gsp
