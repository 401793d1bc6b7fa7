// Copyright 2026 The qoc Authors
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

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace qoc {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr cplx kI{0.0, 1.0};
inline constexpr double kPi = 3.14159265358979323846;

/// Numerical tolerances shared across modules.
namespace tol {
inline constexpr double hermitian = 1e-12;
inline constexpr double ket_norm = 1e-10;
inline constexpr double trace = 1e-10;
inline constexpr double positivity = 1e-10;
inline constexpr double unitary = 1e-10;
}  // namespace tol

enum class ErrorCode {
  dimension_mismatch,
  invalid_argument,
  invalid_state,
  not_unitary,
  convert_first,
  missing_derivative,
  under_resolved,
  degenerate,
  detuning_condition,
  numerics,
  schema,
  io,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::invalid_state: return "invalid_state";
    case ErrorCode::not_unitary: return "not_unitary";
    case ErrorCode::convert_first: return "convert_first";
    case ErrorCode::missing_derivative: return "missing_derivative";
    case ErrorCode::under_resolved: return "under_resolved";
    case ErrorCode::degenerate: return "degenerate";
    case ErrorCode::detuning_condition: return "detuning_condition";
    case ErrorCode::numerics: return "numerics";
    case ErrorCode::schema: return "schema";
    case ErrorCode::io: return "io";
  }
  return "unknown";
}

/// The single exception type thrown by the library. The code is stable and
/// is what the CLI reports in its machine-readable error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline void require_same_dim(Eigen::Index a, Eigen::Index b,
                             std::string_view context) {
  if (a != b) {
    throw Error(ErrorCode::dimension_mismatch,
                std::string(context) + ": dimension " + std::to_string(a) +
                    " vs " + std::to_string(b));
  }
}

}  // namespace qoc
