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
#include "blochnorm/bloch_decomposition.hpp"

#include <cmath>
#include <numeric>

#include "blochnorm/error.hpp"
#include "blochnorm/su_basis.hpp"

namespace blochnorm {
namespace {

using RowMajorComplex = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

void check_subset(PartySet subset, int n) {
  if (!subset.valid_for(n)) {
    throw Error(ErrorCode::kInvalidSubset, "subset {" + subset.to_string() +
                                               "} is not a non-empty subset of {1.." +
                                               std::to_string(n) + "}");
  }
}

// B_0 = I, B_k = G_{k-1}.
const ComplexMatrix& extended_generator(const GeneratorBasis& basis, const ComplexMatrix& identity,
                                        int mu) {
  return mu == 0 ? identity : basis[static_cast<std::size_t>(mu - 1)];
}

// Position of the pair (row, col) of a d^n x d^n operator in the slot layout
// used by the contraction: slot p holds a_p * d + b_p, party 1 most
// significant.
std::vector<std::size_t> slot_index_map(int d, int n) {
  const std::size_t dim = ipow(d, n);
  std::vector<std::size_t> map(dim * dim);
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      std::size_t ra = a;
      std::size_t rb = b;
      std::size_t slot = 0;
      std::size_t weight = 1;
      for (int p = n; p >= 1; --p) {
        slot += ((ra % d) * d + (rb % d)) * weight;
        ra /= d;
        rb /= d;
        weight *= static_cast<std::size_t>(d) * d;
      }
      map[a * dim + b] = slot;
    }
  }
  return map;
}

// Applies the (d^2 x d^2) matrix op to slot `party` of w in place.
void mode_product(std::vector<Complex>& w, int d, int n, int party, const ComplexMatrix& op) {
  const auto d2 = static_cast<Eigen::Index>(d) * d;
  const auto stride = static_cast<Eigen::Index>(ipow(d2, n - party));
  const auto outer = static_cast<Eigen::Index>(ipow(d2, party - 1));
  RowMajorComplex tmp(d2, stride);
  for (Eigen::Index o = 0; o < outer; ++o) {
    Eigen::Map<RowMajorComplex> block(w.data() + o * d2 * stride, d2, stride);
    tmp.noalias() = op * block;
    block = tmp;
  }
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double checked_real(Complex z) {
  if (std::abs(z.imag()) > tol::kImaginaryResidue) {
    throw Error(ErrorCode::kValidation,
                "Bloch coefficient has imaginary residue " + std::to_string(z.imag()) +
                    "; input is not Hermitian");
  }
  return z.real();
}

// Flat index into the full coefficient array for the multi-index whose
// generator digits (row-major over the subset) are packed in `local`.
std::size_t coefficient_index(int d, int n, const std::vector<int>& parties, std::size_t local) {
  const std::size_t g = static_cast<std::size_t>(d) * d - 1;
  const std::size_t d2 = g + 1;
  std::size_t index = 0;
  for (auto it = parties.rbegin(); it != parties.rend(); ++it) {
    const std::size_t mu = local % g + 1;
    local /= g;
    index += mu * ipow(d2, n - *it);
  }
  return index;
}

BlochTensor slice(const std::vector<double>& coefficients, int d, int n, PartySet subset) {
  const auto parties = subset.parties();
  const std::size_t g = static_cast<std::size_t>(d) * d - 1;
  std::vector<double> out(ipow(g, subset.size()));
  for (std::size_t local = 0; local < out.size(); ++local) {
    out[local] = coefficients[coefficient_index(d, n, parties, local)];
  }
  return BlochTensor(subset, d, std::move(out));
}

}  // namespace

BlochTensor::BlochTensor(PartySet subset, int local_dim, std::vector<double> coefficients)
    : subset_(subset), local_dim_(local_dim), coefficients_(std::move(coefficients)) {
  if (subset_.empty()) throw Error(ErrorCode::kInvalidSubset, "Bloch tensor needs a non-empty subset");
  if (local_dim_ < 2) throw Error(ErrorCode::kInvalidDimension, "local dimension must be >= 2");
  const std::size_t expected = ipow(static_cast<std::size_t>(local_dim_) * local_dim_ - 1, subset_.size());
  if (coefficients_.size() != expected) {
    throw Error(ErrorCode::kValidation, "T^(" + subset_.label() + ") needs " +
                                            std::to_string(expected) + " coefficients, got " +
                                            std::to_string(coefficients_.size()));
  }
}

std::size_t BlochTensor::offset(std::span<const int> generator_indices) const {
  if (static_cast<int>(generator_indices.size()) != order()) {
    throw Error(ErrorCode::kValidation, "multi-index has the wrong arity");
  }
  const int g = local_dim_ * local_dim_ - 1;
  std::size_t off = 0;
  for (int i : generator_indices) {
    if (i < 0 || i >= g) throw Error(ErrorCode::kValidation, "generator index out of range");
    off = off * g + static_cast<std::size_t>(i);
  }
  return off;
}

double BlochTensor::norm_sq() const {
  return std::inner_product(coefficients_.begin(), coefficients_.end(), coefficients_.begin(), 0.0);
}

double tensor_norm_sq(const BlochTensor& t) { return t.norm_sq(); }

BlochDecomposition::BlochDecomposition(int local_dim, int num_parties)
    : local_dim_(local_dim), num_parties_(num_parties) {
  if (local_dim < 2) throw Error(ErrorCode::kInvalidDimension, "local dimension must be >= 2");
  if (num_parties < 1 || num_parties > kMaxParties) {
    throw Error(ErrorCode::kInvalidDimension, "party count must lie in [1, 4]");
  }
  by_mask_.resize(std::size_t{1} << num_parties);
}

void BlochDecomposition::set(BlochTensor tensor) {
  if (tensor.local_dim() != local_dim_) {
    throw Error(ErrorCode::kValidation, "tensor dimension does not match decomposition");
  }
  check_subset(tensor.subset(), num_parties_);
  const auto mask = tensor.subset().mask();
  by_mask_[mask].emplace(std::move(tensor));
}

bool BlochDecomposition::contains(PartySet subset) const {
  return subset.valid_for(num_parties_) && by_mask_[subset.mask()].has_value();
}

const BlochTensor& BlochDecomposition::at(PartySet subset) const {
  if (!contains(subset)) {
    throw Error(ErrorCode::kInvalidSubset, "no tensor for subset {" + subset.to_string() + "}");
  }
  return *by_mask_[subset.mask()];
}

bool BlochDecomposition::complete() const { return size() + 1 == by_mask_.size(); }

std::size_t BlochDecomposition::size() const {
  std::size_t count = 0;
  for (std::size_t m = 1; m < by_mask_.size(); ++m) count += by_mask_[m].has_value() ? 1 : 0;
  return count;
}

std::vector<const BlochTensor*> BlochDecomposition::tensors() const {
  std::vector<const BlochTensor*> out;
  for (PartySet s : nonempty_subsets(num_parties_)) {
    if (by_mask_[s.mask()]) out.push_back(&*by_mask_[s.mask()]);
  }
  return out;
}

double BlochDecomposition::norm_sq_sum(int order) const {
  double total = 0.0;
  for (const BlochTensor* t : tensors()) {
    if (t->order() == order) total += t->norm_sq();
  }
  return total;
}

std::vector<double> correlation_coefficients(const DensityMatrix& rho) {
  const int d = rho.local_dim();
  const int n = rho.num_parties();
  const auto basis = shared_basis(d);
  const auto d2 = static_cast<Eigen::Index>(d) * d;
  const std::size_t dim = ipow(d, n);

  const auto slots = slot_index_map(d, n);
  std::vector<Complex> w(dim * dim);
  const ComplexMatrix& m = rho.matrix();
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      w[slots[a * dim + b]] = m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
    }
  }

  // op(mu, a*d + b) = B_mu(b, a), so sum_ab op(mu, ab) rho_ab = Tr(rho B_mu).
  const ComplexMatrix identity = ComplexMatrix::Identity(d, d);
  ComplexMatrix op(d2, d2);
  for (int mu = 0; mu < d2; ++mu) {
    const ComplexMatrix& g = extended_generator(*basis, identity, mu);
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) op(mu, a * d + b) = g(b, a);
    }
  }
  for (int p = 1; p <= n; ++p) mode_product(w, d, n, p, op);

  std::vector<double> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = checked_real(w[i]);
  return out;
}

BlochTensor bloch_tensor(const DensityMatrix& rho, PartySet subset) {
  check_subset(subset, rho.num_parties());
  return slice(correlation_coefficients(rho), rho.local_dim(), rho.num_parties(), subset);
}

BlochTensor bloch_tensor_naive(const DensityMatrix& rho, PartySet subset) {
  const int n = rho.num_parties();
  const int d = rho.local_dim();
  check_subset(subset, n);
  const auto basis = shared_basis(d);
  const ComplexMatrix identity = ComplexMatrix::Identity(d, d);
  const auto parties = subset.parties();
  const int g = d * d - 1;
  const ComplexMatrix rho_t = rho.matrix().transpose();

  std::vector<double> out(ipow(g, subset.size()));
  std::vector<int> digits(parties.size());
  for (std::size_t local = 0; local < out.size(); ++local) {
    std::size_t rest = local;
    for (auto k = digits.size(); k-- > 0;) {
      digits[k] = static_cast<int>(rest % g);
      rest /= g;
    }
    ComplexMatrix op = ComplexMatrix::Identity(1, 1);
    std::size_t k = 0;
    for (int p = 1; p <= n; ++p) {
      const ComplexMatrix& factor = subset.contains(p) ? (*basis)[digits[k++]] : identity;
      op = kron(op, factor);
    }
    // Tr(rho Op) = sum_ab rho_ab Op_ba
    out[local] = checked_real(rho_t.cwiseProduct(op).sum());
  }
  return BlochTensor(subset, d, std::move(out));
}

BlochDecomposition full_decomposition(const DensityMatrix& rho) {
  const int d = rho.local_dim();
  const int n = rho.num_parties();
  const auto coefficients = correlation_coefficients(rho);
  BlochDecomposition out(d, n);
  for (PartySet s : nonempty_subsets(n)) out.set(slice(coefficients, d, n, s));
  return out;
}

ComplexMatrix reconstruct_matrix(const BlochDecomposition& decomposition) {
  const int d = decomposition.local_dim();
  const int n = decomposition.num_parties();
  if (!decomposition.complete()) {
    throw Error(ErrorCode::kValidation, "decomposition is missing " +
                                            std::to_string((std::size_t{1} << n) - 1 -
                                                           decomposition.size()) +
                                            " subset tensor(s)");
  }
  const auto basis = shared_basis(d);
  const auto d2 = static_cast<Eigen::Index>(d) * d;
  const std::size_t dim = ipow(d, n);

  std::vector<Complex> w(dim * dim, Complex(0.0));
  w[0] = 1.0;  // Tr(rho)
  for (const BlochTensor* t : decomposition.tensors()) {
    const auto parties = t->subset().parties();
    for (std::size_t local = 0; local < t->coefficients().size(); ++local) {
      w[coefficient_index(d, n, parties, local)] = t->coefficients()[local];
    }
  }

  // op(a*d + b, mu) = c_mu B_mu(a, b) with c_0 = 1/d, c_k = 1/2.
  const ComplexMatrix identity = ComplexMatrix::Identity(d, d);
  ComplexMatrix op(d2, d2);
  for (int mu = 0; mu < d2; ++mu) {
    const ComplexMatrix& g = extended_generator(*basis, identity, mu);
    const double c = mu == 0 ? 1.0 / d : 0.5;
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) op(a * d + b, mu) = c * g(a, b);
    }
  }
  for (int p = 1; p <= n; ++p) mode_product(w, d, n, p, op);

  const auto slots = slot_index_map(d, n);
  ComplexMatrix out(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = w[slots[a * dim + b]];
    }
  }
  return out;
}

DensityMatrix reconstruct(const BlochDecomposition& decomposition) {
  return DensityMatrix(decomposition.local_dim(), decomposition.num_parties(),
                       reconstruct_matrix(decomposition));
}

ComplexMatrix single_qudit_matrix(int d, std::span<const double> bloch_vector) {
  const auto basis = shared_basis(d);
  if (bloch_vector.size() != basis->size()) {
    throw Error(ErrorCode::kValidation, "Bloch vector needs d^2 - 1 entries");
  }
  ComplexMatrix m = ComplexMatrix::Identity(d, d) / static_cast<double>(d);
  for (std::size_t i = 0; i < basis->size(); ++i) m += 0.5 * bloch_vector[i] * (*basis)[i];
  return m;
}

double bloch_outer_radius(int d) {
  if (d < 2) throw Error(ErrorCode::kInvalidDimension, "local dimension must be >= 2");
  return std::sqrt(2.0 * (1.0 - 1.0 / d));
}

double bloch_inner_radius(int d) {
  if (d < 2) throw Error(ErrorCode::kInvalidDimension, "local dimension must be >= 2");
  return std::sqrt(2.0 / (static_cast<double>(d) * (d - 1)));
}

}  // namespace blochnorm
