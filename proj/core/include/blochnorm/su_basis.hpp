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

#ifndef BLOCHNORM_SU_BASIS_HPP_
#define BLOCHNORM_SU_BASIS_HPP_

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "blochnorm/types.hpp"

namespace blochnorm {

/// The d^2-1 generalized Gell-Mann matrices of SU(d), normalized so that
/// Tr(G_i G_j) = 2 delta_ij.
///
/// Order is fixed: symmetric S_jk = E_jk + E_kj for j < k (lexicographic),
/// then antisymmetric A_jk = -i(E_jk - E_kj) (lexicographic), then diagonal
/// D_l = sqrt(2/(l(l+1))) (sum_{m<l} E_mm - l E_ll) for l = 1..d-1.
/// For d = 2 this is (sigma_x, sigma_y, sigma_z).
class GeneratorBasis {
 public:
  explicit GeneratorBasis(int local_dim);

  int local_dim() const noexcept { return local_dim_; }
  std::size_t size() const noexcept { return generators_.size(); }
  const ComplexMatrix& operator[](std::size_t i) const { return generators_[i]; }
  std::span<const ComplexMatrix> generators() const noexcept { return generators_; }

  /// Largest deviation from G = G^dagger, Tr G = 0 and Tr(G_i G_j) = 2 delta_ij.
  double max_constraint_violation() const;

 private:
  int local_dim_;
  std::vector<ComplexMatrix> generators_;
};

/// Builds the basis for dimension d. Throws Error(kInvalidDimension) if d < 2.
GeneratorBasis generate_basis(int d);

/// Process-wide immutable basis for d; constructed once per dimension.
std::shared_ptr<const GeneratorBasis> shared_basis(int d);

/// Coefficients of a Hermitian H in {I, G_1, ..., G_{d^2-1}}:
/// element 0 is Tr(H)/d, element i is Tr(H G_i)/2.
std::vector<double> hermitian_coefficients(const GeneratorBasis& basis,
                                           const ComplexMatrix& h);

/// Inverse of hermitian_coefficients.
ComplexMatrix from_hermitian_coefficients(const GeneratorBasis& basis,
                                          std::span<const double> coefficients);

}  // namespace blochnorm

#endif  // BLOCHNORM_SU_BASIS_HPP_
