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

#include "gsp/types.hpp"

namespace gsp {

enum class CgStatus { Converged, MaxIterations, Breakdown };

template <typename Scalar = double>
struct CgResult {
  Vector<Scalar> x;
  int iterations = 0;
  Scalar relative_residual = Scalar(0);
  CgStatus status = CgStatus::MaxIterations;
};

struct NoObserver {
  template <typename V>
  void operator()(int, const V&) const {}
};

/// Conjugate gradients for a symmetric positive semidefinite operator given as a
/// callable `op(v) -> A v`. Stops once ||b - A x|| <= tol ||b||, checked on the
/// true residual; a drifted recursive residual triggers a restart. Breakdown is
/// reported when a search direction has (numerically) zero curvature while the
/// residual is still large, i.e. the right-hand side reaches the null space.
/// `observe(iteration, x)` is called after every update.
template <typename Scalar, typename Apply, typename Observer = NoObserver>
CgResult<Scalar> conjugate_gradient(const Apply& op, const Vector<Scalar>& b, Vector<Scalar> x,
                                    Scalar tol, int max_iter, Observer&& observe = {}) {
  CgResult<Scalar> result;
  const Scalar b_norm = b.norm();
  if (b_norm == Scalar(0)) {
    result.x = Vector<Scalar>::Zero(b.size());
    result.status = CgStatus::Converged;
    return result;
  }
  Vector<Scalar> r = b - op(x);
  Vector<Scalar> p = r;
  Scalar rr = r.squaredNorm();
  const Scalar threshold = tol * b_norm;
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  Scalar curvature_scale = Scalar(0);
  int it = 0;
  while (true) {
    if (std::sqrt(rr) <= threshold) {
      r = b - op(x);
      rr = r.squaredNorm();
      if (std::sqrt(rr) <= threshold) {
        result.status = CgStatus::Converged;
        break;
      }
      p = r;
    }
    if (it >= max_iter) {
      result.status = CgStatus::MaxIterations;
      break;
    }
    const Vector<Scalar> ap = op(p);
    const Scalar pap = p.dot(ap);
    const Scalar pp = p.squaredNorm();
    curvature_scale = std::max(curvature_scale, pap / pp);
    if (!(pap > Scalar(64) * eps * curvature_scale * pp)) {
      result.status = CgStatus::Breakdown;
      break;
    }
    const Scalar alpha = rr / pap;
    x += alpha * p;
    r -= alpha * ap;
    const Scalar rr_next = r.squaredNorm();
    p = r + (rr_next / rr) * p;
    rr = rr_next;
    ++it;
    observe(it, x);
  }
  result.iterations = it;
  result.relative_residual = (b - op(x)).norm() / b_norm;
  result.x = std::move(x);
  return result;
}

}  // namespace gsp
