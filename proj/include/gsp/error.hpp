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

#include <stdexcept>
#include <string>
#include <string_view>

namespace gsp {

enum class ErrorCode {
  InvalidGraph,
  NonSymmetric,
  DimensionMismatch,
  IndexOutOfRange,
  NonFiniteKernel,
  IntervalTooSmall,
  NotDivisible,
  ModelInvalid,
  SolverDiverged,
  SingularSystem,
  SingularInformationMatrix,
  InsufficientSupport,
  BudgetTooLarge,
  InvalidSpec,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::NonSymmetric: return "NonSymmetric";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NonFiniteKernel: return "NonFiniteKernel";
    case ErrorCode::IntervalTooSmall: return "IntervalTooSmall";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::ModelInvalid: return "ModelInvalid";
    case ErrorCode::SolverDiverged: return "SolverDiverged";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::SingularInformationMatrix: return "SingularInformationMatrix";
    case ErrorCode::InsufficientSupport: return "InsufficientSupport";
    case ErrorCode::BudgetTooLarge: return "BudgetTooLarge";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline void require(bool condition, ErrorCode code, const std::string& what) {
  if (!condition) throw Error(code, what);
}

}  // namespace gsp
