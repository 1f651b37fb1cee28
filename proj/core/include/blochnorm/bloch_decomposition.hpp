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
#ifndef BLOCHNORM_BLOCH_DECOMPOSITION_HPP_
#define BLOCHNORM_BLOCH_DECOMPOSITION_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "blochnorm/party_set.hpp"
#include "blochnorm/quantum_states.hpp"
#include "blochnorm/types.hpp"

namespace blochnorm {

/// Correlation tensor T^(S): t_{i_1..i_k} = Tr(rho G_{i_1} (x) ... (x) G_{i_k})
/// with G_{i_m} acting on the m-th party of S (ascending) and the identity
/// elsewhere. Coefficients are row-major over generator indices, the last
/// party of S varying fastest.
class BlochTensor {
 public:
  /// Throws Error(kInvalidSubset) for an empty subset, Error(kValidation)
  /// unless coefficients.size() == (d^2-1)^|S|.
  BlochTensor(PartySet subset, int local_dim, std::vector<double> coefficients);

  PartySet subset() const noexcept { return subset_; }
  int local_dim() const noexcept { return local_dim_; }
  int order() const noexcept { return subset_.size(); }
  const std::vector<double>& coefficients() const noexcept { return coefficients_; }

  /// Flat offset of the multi-index (0-based generator indices, one per party).
  std::size_t offset(std::span<const int> generator_indices) const;
  double at(std::span<const int> generator_indices) const {
    return coefficients_[offset(generator_indices)];
  }

  double norm_sq() const;

 private:
  PartySet subset_;
  int local_dim_;
  std::vector<double> coefficients_;
};

double tensor_norm_sq(const BlochTensor& t);

/// T^(S) for every non-empty S of {1..n}.
class BlochDecomposition {
 public:
  BlochDecomposition(int local_dim, int num_parties);

  int local_dim() const noexcept { return local_dim_; }
  int num_parties() const noexcept { return num_parties_; }

  /// Inserts or replaces T^(S). Throws Error(kValidation) on a dimension
  /// mismatch and Error(kInvalidSubset) if S is not within {1..n}.
  void set(BlochTensor tensor);
  bool contains(PartySet subset) const;
  /// Throws Error(kInvalidSubset) when absent.
  const BlochTensor& at(PartySet subset) const;
  bool complete() const;
  std::size_t size() const;

  /// Present tensors in canonical subset order.
  std::vector<const BlochTensor*> tensors() const;

  /// Sum of ||T^(S)||^2 over all S of the given order.
  double norm_sq_sum(int order) const;

 private:
  int local_dim_;
  int num_parties_;
  std::vector<std::optional<BlochTensor>> by_mask_;
};

/// Full coefficient array C over {I, G_1, ..., G_{d^2-1}}^n, where index 0
/// is the identity: C[mu_1..mu_n] = Tr(rho B_{mu_1} (x) ... (x) B_{mu_n}).
/// Computed by contracting one party at a time, O(n d^(2n+2)).
std::vector<double> correlation_coefficients(const DensityMatrix& rho);

/// T^(S) by contraction. Throws Error(kInvalidSubset) if S is not a
/// non-empty subset of {1..n}.
BlochTensor bloch_tensor(const DensityMatrix& rho, PartySet subset);

/// T^(S) by forming each Kronecker operator explicitly and taking
/// Tr(rho Op). Reference path; agrees with bloch_tensor to ~1e-15.
BlochTensor bloch_tensor_naive(const DensityMatrix& rho, PartySet subset);

BlochDecomposition full_decomposition(const DensityMatrix& rho);

/// sum_S (1 / (d^(n-|S|) 2^|S|)) sum_i t^S_i (G (x) ...), plus I/d^n.
/// Throws Error(kValidation) if the decomposition is incomplete.
/// No positivity check is made on the result.
ComplexMatrix reconstruct_matrix(const BlochDecomposition& decomposition);

/// reconstruct_matrix validated as a DensityMatrix.
DensityMatrix reconstruct(const BlochDecomposition& decomposition);

/// Single-qudit state (1/d) I + (1/2) sum_i b_i G_i, unchecked.
ComplexMatrix single_qudit_matrix(int d, std::span<const double> bloch_vector);

/// Outer radius R = sqrt(2(1 - 1/d)) and inner radius r = sqrt(2/(d(d-1)))
/// of the single-qudit Bloch body.
double bloch_outer_radius(int d);
double bloch_inner_radius(int d);

}  // namespace blochnorm

#endif  // BLOCHNORM_BLOCH_DECOMPOSITION_HPP_
