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

#include "gsp/kernel.hpp"

#include <cmath>
#include <sstream>

#include "gsp/error.hpp"

namespace gsp {

namespace {

double parse_double(std::string_view text, std::string_view what) {
  try {
    std::size_t used = 0;
    const std::string s(text);
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError,
                "cannot parse " + std::string(what) + " from '" + std::string(text) + "'");
  }
}

std::string format_number(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

SpectralKernel identity_kernel() {
  return {[](double) { return 1.0; }, "identity"};
}

SpectralKernel constant_kernel(double value) {
  return {[value](double) { return value; }, "constant:" + format_number(value)};
}

SpectralKernel exp_decay_kernel(double tau) {
  require(tau > 0.0, ErrorCode::InvalidSpec, "exp_decay requires tau > 0");
  return {[tau](double l) { return std::exp(-l / tau); }, "exp_decay:" + format_number(tau)};
}

SpectralKernel linear_decay_kernel(double lambda_max) {
  require(lambda_max > 0.0, ErrorCode::InvalidSpec, "linear_decay requires lambda_max > 0");
  return {[lambda_max](double l) { return 1.0 - 2.0 * l / lambda_max; }, "linear_decay"};
}

SpectralKernel polynomial_kernel(std::vector<double> coefficients) {
  require(!coefficients.empty(), ErrorCode::InvalidSpec, "polynomial needs coefficients");
  std::string name = "polynomial:";
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    name += (i ? "," : "") + format_number(coefficients[i]);
  return {[c = std::move(coefficients)](double l) {
            double acc = 0.0;
            for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * l + *it;
            return acc;
          },
          name};
}

SpectralKernel step_kernel(double cutoff) {
  return {[cutoff](double l) { return l <= cutoff ? 1.0 : 0.0; },
          "step:" + format_number(cutoff)};
}

SpectralKernel scaled_kernel(SpectralKernel k, double factor) {
  auto name = k.name + "*" + format_number(factor);
  return {[f = std::move(k.evaluate), factor](double l) { return factor * f(l); }, name};
}

SpectralKernel ideal_lowpass_kernel(const Eigen::VectorXd& eigenvalues, Eigen::Index k) {
  const Eigen::Index n = eigenvalues.size();
  require(k >= 1 && k <= n, ErrorCode::InvalidSpec, "ideal_lowpass band must be in [1, N]");
  double cutoff;
  if (k == n) {
    cutoff = eigenvalues[n - 1] + 1.0;
  } else {
    const double lo = eigenvalues[k - 1];
    const double hi = eigenvalues[k];
    if (hi - lo < 1e-9) {
      Eigen::Index last = k;
      while (last + 1 < n && eigenvalues[last + 1] - eigenvalues[last] < 1e-9) ++last;
      cutoff = last + 1 < n ? 0.5 * (eigenvalues[last] + eigenvalues[last + 1])
                            : eigenvalues[n - 1] + 1.0;
    } else {
      cutoff = 0.5 * (lo + hi);
    }
  }
  auto kernel = step_kernel(cutoff);
  kernel.name = "ideal_lowpass:" + std::to_string(k);
  return kernel;
}

SpectralKernel parse_kernel(std::string_view spec, const Eigen::VectorXd& eigenvalues) {
  const auto colon = spec.find(':');
  const std::string_view head = spec.substr(0, colon);
  const std::string_view arg =
      colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  const double lambda_max = eigenvalues.size() ? eigenvalues.maxCoeff() : 0.0;

  if (head == "identity") return identity_kernel();
  if (head == "linear_decay") return linear_decay_kernel(lambda_max);
  if (head == "exp_decay") return exp_decay_kernel(parse_double(arg, "tau"));
  if (head == "ideal_lowpass") {
    const double k = parse_double(arg, "band count");
    require(k == std::floor(k), ErrorCode::ParseError, "band count must be an integer");
    return ideal_lowpass_kernel(eigenvalues, static_cast<Eigen::Index>(k));
  }
  if (head == "polynomial") {
    std::vector<double> c;
    std::size_t start = 0;
    while (start <= arg.size()) {
      const auto comma = arg.find(',', start);
      const auto token = arg.substr(start, comma == std::string_view::npos ? arg.npos : comma - start);
      c.push_back(parse_double(token, "polynomial coefficient"));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return polynomial_kernel(std::move(c));
  }
  throw Error(ErrorCode::ParseError, "unknown kernel '" + std::string(spec) + "'");
}

}  // namespace gsp
