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
#include "blochnorm/quantum_states.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "blochnorm/error.hpp"

namespace blochnorm {
namespace {

void check_shape(int d, int n) {
  if (d < 2) {
    throw Error(ErrorCode::kInvalidDimension, "local dimension must be >= 2, got " + std::to_string(d));
  }
  if (n < 1 || n > kMaxParties) {
    throw Error(ErrorCode::kInvalidDimension, "party count must lie in [1, 4], got " + std::to_string(n));
  }
}

Eigen::Index hilbert_dim(int d, int n) { return static_cast<Eigen::Index>(ipow(d, n)); }

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

// Offset of each local multi-index of `parties` inside the full index of an
// n-party register (party 1 most significant).
std::vector<Eigen::Index> digit_offsets(int d, int n, const std::vector<int>& parties) {
  const auto k = static_cast<int>(parties.size());
  std::vector<Eigen::Index> offsets(ipow(d, k));
  for (std::size_t local = 0; local < offsets.size(); ++local) {
    std::size_t rest = local;
    Eigen::Index full = 0;
    for (int m = k - 1; m >= 0; --m) {
      const auto digit = static_cast<Eigen::Index>(rest % d);
      rest /= d;
      full += digit * static_cast<Eigen::Index>(ipow(d, n - parties[m]));
    }
    offsets[local] = full;
  }
  return offsets;
}

}  // namespace

PureState::PureState(int local_dim, int num_parties, ComplexVector amplitudes)
    : local_dim_(local_dim), num_parties_(num_parties), amplitudes_(std::move(amplitudes)) {
  check_shape(local_dim_, num_parties_);
  if (amplitudes_.size() != hilbert_dim(local_dim_, num_parties_)) {
    throw Error(ErrorCode::kValidation,
                "expected " + std::to_string(hilbert_dim(local_dim_, num_parties_)) +
                    " amplitudes, got " + std::to_string(amplitudes_.size()));
  }
  if (!amplitudes_.allFinite()) throw Error(ErrorCode::kValidation, "non-finite amplitude");
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > tol::kState) {
    throw Error(ErrorCode::kValidation, "state vector is not normalized (norm " + fmt_double(norm) + ")");
  }
}

PureState PureState::normalized(int local_dim, int num_parties, ComplexVector amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw Error(ErrorCode::kValidation, "cannot normalize a zero or non-finite vector");
  }
  amplitudes /= norm;
  return PureState(local_dim, num_parties, std::move(amplitudes));
}

Ensemble::Ensemble(std::vector<EnsembleMember> members) : members_(std::move(members)) {
  if (members_.empty()) throw Error(ErrorCode::kValidation, "ensemble has no members");
  double total = 0.0;
  for (const auto& m : members_) {
    if (!(m.weight >= -tol::kState && m.weight <= 1.0 + tol::kState)) {
      throw Error(ErrorCode::kValidation, "ensemble weight outside [0, 1]");
    }
    if (m.state.local_dim() != local_dim() || m.state.num_parties() != num_parties()) {
      throw Error(ErrorCode::kValidation, "ensemble members disagree on (d, n)");
    }
    total += m.weight;
  }
  if (std::abs(total - 1.0) > tol::kState) {
    throw Error(ErrorCode::kValidation, "ensemble weights sum to " + fmt_double(total));
  }
}

StateDiagnostics diagnose(const ComplexMatrix& matrix) {
  StateDiagnostics out{};
  out.hermiticity_error = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
  out.trace_error = std::abs(matrix.trace() - Complex(1.0));
  const ComplexMatrix herm = 0.5 * (matrix + matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm, Eigen::EigenvaluesOnly);
  out.min_eigenvalue = solver.eigenvalues().minCoeff();
  return out;
}

DensityMatrix::DensityMatrix(int local_dim, int num_parties, ComplexMatrix matrix)
    : local_dim_(local_dim), num_parties_(num_parties) {
  check_shape(local_dim, num_parties);
  const Eigen::Index dim = hilbert_dim(local_dim, num_parties);
  if (matrix.rows() != dim || matrix.cols() != dim) {
    throw Error(ErrorCode::kValidation, "density matrix must be " + std::to_string(dim) + "x" +
                                            std::to_string(dim));
  }
  if (!matrix.allFinite()) throw Error(ErrorCode::kValidation, "non-finite matrix entry");
  const StateDiagnostics diag = diagnose(matrix);
  if (diag.hermiticity_error > tol::kState) {
    throw Error(ErrorCode::kValidation, "matrix is not Hermitian (max deviation " +
                                            fmt_double(diag.hermiticity_error) + ")");
  }
  if (diag.trace_error > tol::kState) {
    throw Error(ErrorCode::kValidation, "trace differs from 1 by " + fmt_double(diag.trace_error));
  }
  if (diag.min_eigenvalue < -tol::kState) {
    throw Error(ErrorCode::kValidation, "matrix is not positive semidefinite (min eigenvalue " +
                                            fmt_double(diag.min_eigenvalue) + ")");
  }
  matrix_ = 0.5 * (matrix + matrix.adjoint());
}

DensityMatrix from_pure(const PureState& psi) {
  const ComplexVector& v = psi.amplitudes();
  return DensityMatrix(psi.local_dim(), psi.num_parties(), v * v.adjoint());
}

DensityMatrix from_ensemble(const Ensemble& ensemble) {
  const Eigen::Index dim = hilbert_dim(ensemble.local_dim(), ensemble.num_parties());
  ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
  for (const auto& m : ensemble.members()) {
    const ComplexVector& v = m.state.amplitudes();
    rho.noalias() += m.weight * (v * v.adjoint());
  }
  return DensityMatrix(ensemble.local_dim(), ensemble.num_parties(), std::move(rho));
}

PureState ghz(int d, int n) {
  if (d < 2) throw Error(ErrorCode::kInvalidDimension, "GHZ needs d >= 2");
  if (n < 2 || n > kMaxParties) throw Error(ErrorCode::kInvalidDimension, "GHZ needs 2 <= n <= 4");
  const Eigen::Index dim = hilbert_dim(d, n);
  ComplexVector v = ComplexVector::Zero(dim);
  // |i...i> sits at i * (1 + d + ... + d^(n-1)).
  Eigen::Index stride = 0;
  for (int p = 0; p < n; ++p) stride += static_cast<Eigen::Index>(ipow(d, p));
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) v(i * stride) = amp;
  return PureState(d, n, std::move(v));
}

DensityMatrix isotropic_ghz4(double x, int d) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw Error(ErrorCode::kValidation, "mixing parameter x must lie in [0, 1]");
  }
  const PureState g = ghz(d, 4);
  const Eigen::Index dim = hilbert_dim(d, 4);
  ComplexMatrix rho = x * (g.amplitudes() * g.amplitudes().adjoint());
  rho.diagonal().array() += (1.0 - x) / static_cast<double>(dim);
  return DensityMatrix(d, 4, std::move(rho));
}

PureState product_max_entangled(int d) {
  const PureState pair = ghz(d, 2);
  return tensor_product(pair, pair);
}

PureState computational_basis_state(int d, std::span<const int> levels) {
  const int n = static_cast<int>(levels.size());
  check_shape(d, n);
  Eigen::Index index = 0;
  for (int level : levels) {
    if (level < 0 || level >= d) throw Error(ErrorCode::kValidation, "level outside [0, d)");
    index = index * d + level;
  }
  ComplexVector v = ComplexVector::Zero(hilbert_dim(d, n));
  v(index) = 1.0;
  return PureState(d, n, std::move(v));
}

PureState tensor_product(const PureState& a, const PureState& b) {
  if (a.local_dim() != b.local_dim()) {
    throw Error(ErrorCode::kValidation, "tensor factors must share the local dimension");
  }
  const int n = a.num_parties() + b.num_parties();
  check_shape(a.local_dim(), n);
  const ComplexVector& va = a.amplitudes();
  const ComplexVector& vb = b.amplitudes();
  ComplexVector v(va.size() * vb.size());
  for (Eigen::Index i = 0; i < va.size(); ++i) v.segment(i * vb.size(), vb.size()) = va(i) * vb;
  return PureState::normalized(a.local_dim(), n, std::move(v));
}

PureState embed_product(std::span<const PureState> factors, std::span<const PartySet> blocks) {
  if (factors.empty() || factors.size() != blocks.size()) {
    throw Error(ErrorCode::kValidation, "need one block per factor");
  }
  const int d = factors.front().local_dim();
  std::uint32_t covered = 0;
  int n = 0;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (factors[k].local_dim() != d) throw Error(ErrorCode::kValidation, "factors disagree on d");
    if (blocks[k].empty() || blocks[k].size() != factors[k].num_parties()) {
      throw Error(ErrorCode::kInvalidSubset, "block size does not match factor party count");
    }
    if (covered & blocks[k].mask()) throw Error(ErrorCode::kInvalidSubset, "blocks overlap");
    covered |= blocks[k].mask();
    n += factors[k].num_parties();
  }
  check_shape(d, n);
  if (covered != PartySet::all(n).mask()) {
    throw Error(ErrorCode::kInvalidSubset, "blocks do not partition the parties");
  }

  std::vector<std::vector<Eigen::Index>> offsets;
  for (const PartySet& b : blocks) offsets.push_back(digit_offsets(d, n, b.parties()));

  ComplexVector v = ComplexVector::Zero(hilbert_dim(d, n));
  // Walk all combinations of per-factor local indices.
  std::vector<Eigen::Index> local(factors.size(), 0);
  while (true) {
    Complex amp(1.0);
    Eigen::Index full = 0;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      amp *= factors[k].amplitudes()(local[k]);
      full += offsets[k][local[k]];
    }
    v(full) = amp;
    std::size_t k = factors.size();
    while (k > 0) {
      --k;
      if (++local[k] < factors[k].amplitudes().size()) break;
      local[k] = 0;
      if (k == 0) return PureState::normalized(d, n, std::move(v));
    }
  }
}

DensityMatrix partial_trace(const DensityMatrix& rho, PartySet keep) {
  const int n = rho.num_parties();
  const int d = rho.local_dim();
  if (!keep.valid_for(n)) {
    throw Error(ErrorCode::kInvalidSubset,
                "cannot keep parties {" + keep.to_string() + "} of an " + std::to_string(n) +
                    "-party state");
  }
  if (keep.size() == n) return rho;

  const auto keep_offsets = digit_offsets(d, n, keep.parties());
  const auto traced_offsets = digit_offsets(d, n, keep.complement(n).parties());
  const auto out_dim = static_cast<Eigen::Index>(keep_offsets.size());
  const ComplexMatrix& m = rho.matrix();
  ComplexMatrix out = ComplexMatrix::Zero(out_dim, out_dim);
  for (Eigen::Index c = 0; c < out_dim; ++c) {
    for (Eigen::Index r = 0; r < out_dim; ++r) {
      Complex acc(0.0);
      for (Eigen::Index t : traced_offsets) acc += m(keep_offsets[r] + t, keep_offsets[c] + t);
      out(r, c) = acc;
    }
  }
  return DensityMatrix(d, keep.size(), std::move(out));
}

double purity(const DensityMatrix& rho) {
  // rho is stored exactly Hermitian, so Tr(rho^2) = sum |rho_ij|^2.
  return rho.matrix().squaredNorm();
}

Complex inner_product(const PureState& psi, const PureState& phi) {
  if (psi.amplitudes().size() != phi.amplitudes().size()) {
    throw Error(ErrorCode::kValidation, "states live in different spaces");
  }
  return psi.amplitudes().dot(phi.amplitudes());
}

}  // namespace blochnorm
