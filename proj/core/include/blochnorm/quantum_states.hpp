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
#ifndef BLOCHNORM_QUANTUM_STATES_HPP_
#define BLOCHNORM_QUANTUM_STATES_HPP_

#include <span>
#include <vector>

#include "blochnorm/party_set.hpp"
#include "blochnorm/types.hpp"

namespace blochnorm {

// Tensor-product convention: party 1 is the most significant factor, so the
// basis index of |i_1 ... i_n> is sum_p i_p d^(n-p).

/// Normalized state vector of n parties with local dimension d.
class PureState {
 public:
  /// Throws Error(kInvalidDimension) for d < 2 or n outside [1, 4],
  /// Error(kValidation) for a wrong length or | ||psi|| - 1 | > tol::kState.
  PureState(int local_dim, int num_parties, ComplexVector amplitudes);

  /// Same as the constructor but rescales to unit norm first. A zero vector
  /// is still rejected.
  static PureState normalized(int local_dim, int num_parties, ComplexVector amplitudes);

  int local_dim() const noexcept { return local_dim_; }
  int num_parties() const noexcept { return num_parties_; }
  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }

 private:
  int local_dim_;
  int num_parties_;
  ComplexVector amplitudes_;
};

struct EnsembleMember {
  double weight;
  PureState state;
};

/// Convex combination of pure states sharing (d, n).
class Ensemble {
 public:
  /// Throws Error(kValidation) when empty, a weight lies outside [0, 1],
  /// weights do not sum to 1, or members disagree on (d, n).
  explicit Ensemble(std::vector<EnsembleMember> members);

  const std::vector<EnsembleMember>& members() const noexcept { return members_; }
  int local_dim() const noexcept { return members_.front().state.local_dim(); }
  int num_parties() const noexcept { return members_.front().state.num_parties(); }

 private:
  std::vector<EnsembleMember> members_;
};

/// A validated density operator on n <= 4 qudits of equal dimension d.
///
/// On construction the matrix must be Hermitian, unit trace and positive
/// semidefinite, each to tol::kState; the stored matrix is the exact
/// Hermitian part (M + M^dagger)/2 of the input.
class DensityMatrix {
 public:
  DensityMatrix(int local_dim, int num_parties, ComplexMatrix matrix);

  int local_dim() const noexcept { return local_dim_; }
  int num_parties() const noexcept { return num_parties_; }
  /// d^n
  Eigen::Index dim() const noexcept { return matrix_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

 private:
  int local_dim_;
  int num_parties_;
  ComplexMatrix matrix_;
};

/// Checks used by the DensityMatrix constructor, exposed for diagnostics.
struct StateDiagnostics {
  double hermiticity_error;  ///< max |M - M^dagger|
  double trace_error;        ///< |Tr M - 1|
  double min_eigenvalue;     ///< of the Hermitian part
};
StateDiagnostics diagnose(const ComplexMatrix& matrix);

DensityMatrix from_pure(const PureState& psi);
DensityMatrix from_ensemble(const Ensemble& ensemble);

/// (1/sqrt d) sum_i |i>^{(x) n}; requires d >= 2 and 2 <= n <= 4.
PureState ghz(int d, int n);

/// x |GHZ_{d,4}><GHZ_{d,4}| + (1 - x) I/d^4, 0 <= x <= 1.
DensityMatrix isotropic_ghz4(double x, int d);

/// |Phi_d>_{12} (x) |Phi_d>_{34} with |Phi_d> = (1/sqrt d) sum_i |ii>.
PureState product_max_entangled(int d);

/// |i_1 ... i_n> for the given local levels.
PureState computational_basis_state(int d, std::span<const int> levels);

/// Kronecker product of pure states, parties concatenated in argument order.
PureState tensor_product(const PureState& a, const PureState& b);

/// Places the factors of a pure product state on arbitrary parties:
/// factor k occupies the parties of blocks[k]. The blocks must partition
/// {1..n}. Used to build states such as |phi_13> (x) |phi_24>.
PureState embed_product(std::span<const PureState> factors, std::span<const PartySet> blocks);

/// Reduced state on the parties in keep (ascending order).
/// Throws Error(kInvalidSubset) when keep is empty or exceeds {1..n}.
DensityMatrix partial_trace(const DensityMatrix& rho, PartySet keep);

/// Tr(rho^2).
double purity(const DensityMatrix& rho);

/// <psi|phi>
Complex inner_product(const PureState& psi, const PureState& phi);

}  // namespace blochnorm

#endif  // BLOCHNORM_QUANTUM_STATES_HPP_
