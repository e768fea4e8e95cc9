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

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "gsp/types.hpp"

namespace gsp {

/// Graph frequency response g(lambda). Any filter built from a kernel assigns
/// equal responses to equal eigenvalues.
struct SpectralKernel {
  std::function<double(double)> evaluate;
  std::string name;

  double operator()(double lambda) const { return evaluate(lambda); }
};

SpectralKernel identity_kernel();
SpectralKernel constant_kernel(double value);
SpectralKernel exp_decay_kernel(double tau);
SpectralKernel linear_decay_kernel(double lambda_max);
SpectralKernel polynomial_kernel(std::vector<double> coefficients);
SpectralKernel step_kernel(double cutoff);
SpectralKernel scaled_kernel(SpectralKernel k, double factor);

/// Ideal low-pass passing the first k modes of an ascending spectrum. The cutoff
/// sits midway into the gap after the k-th eigenvalue; when that gap is below
/// 1e-9 the whole repeated cluster is passed.
SpectralKernel ideal_lowpass_kernel(const Eigen::VectorXd& eigenvalues, Eigen::Index k);

/// Parses the registry names `identity`, `ideal_lowpass:K`, `exp_decay:tau`,
/// `linear_decay` and `polynomial:c0,c1,...`. The spectrum supplies lambda_max
/// and the band edges.
SpectralKernel parse_kernel(std::string_view spec, const Eigen::VectorXd& eigenvalues);

template <typename Scalar, typename Derived>
Vector<Scalar> kernel_response(const SpectralKernel& k, const Eigen::MatrixBase<Derived>& lambdas) {
  Vector<Scalar> r(lambdas.size());
  for (Eigen::Index i = 0; i < lambdas.size(); ++i)
    r[i] = static_cast<Scalar>(k(static_cast<double>(lambdas[i])));
  return r;
}

}  // namespace gsp
