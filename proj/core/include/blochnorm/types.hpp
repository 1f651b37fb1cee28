// Copyright 2026 The blochnorm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BLOCHNORM_TYPES_HPP_
#define BLOCHNORM_TYPES_HPP_

#include <complex>
#include <cstddef>
#include <cstdint>

#include <Eigen/Dense>

namespace blochnorm {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Tolerances shared across modules.
namespace tol {
/// Hermiticity, trace, normalization and positivity checks on states.
inline constexpr double kState = 1e-9;
/// Largest imaginary residue accepted on a Bloch coefficient.
inline constexpr double kImaginaryResidue = 1e-10;
/// Default comparison tolerance for bound and threshold checks.
inline constexpr double kCompare = 1e-9;
}  // namespace tol

/// Integer power for small non-negative exponents.
constexpr std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace blochnorm

#endif  // BLOCHNORM_TYPES_HPP_
