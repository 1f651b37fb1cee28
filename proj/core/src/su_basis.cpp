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
#include "blochnorm/su_basis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "blochnorm/error.hpp"

namespace blochnorm {

GeneratorBasis::GeneratorBasis(int local_dim) : local_dim_(local_dim) {
  if (local_dim < 2) {
    throw Error(ErrorCode::kInvalidDimension,
                "local dimension must be >= 2, got " + std::to_string(local_dim));
  }
  const int d = local_dim;
  generators_.reserve(static_cast<std::size_t>(d * d - 1));

  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix s = ComplexMatrix::Zero(d, d);
      s(j, k) = 1.0;
      s(k, j) = 1.0;
      generators_.push_back(std::move(s));
    }
  }
  const Complex i_unit(0.0, 1.0);
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix a = ComplexMatrix::Zero(d, d);
      a(j, k) = -i_unit;
      a(k, j) = i_unit;
      generators_.push_back(std::move(a));
    }
  }
  for (int l = 1; l < d; ++l) {
    const double scale = std::sqrt(2.0 / (l * (l + 1.0)));
    ComplexMatrix g = ComplexMatrix::Zero(d, d);
    for (int m = 0; m < l; ++m) g(m, m) = scale;
    g(l, l) = -scale * l;
    generators_.push_back(std::move(g));
  }
}

double GeneratorBasis::max_constraint_violation() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const ComplexMatrix& gi = generators_[i];
    worst = std::max(worst, (gi - gi.adjoint()).cwiseAbs().maxCoeff());
    worst = std::max(worst, std::abs(gi.trace()));
    for (std::size_t j = 0; j < generators_.size(); ++j) {
      const Complex gram = (gi * generators_[j]).trace();
      worst = std::max(worst, std::abs(gram - Complex(i == j ? 2.0 : 0.0)));
    }
  }
  return worst;
}

GeneratorBasis generate_basis(int d) { return GeneratorBasis(d); }

std::shared_ptr<const GeneratorBasis> shared_basis(int d) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const GeneratorBasis>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  auto basis = std::make_shared<const GeneratorBasis>(d);
  cache.emplace(d, basis);
  return basis;
}

std::vector<double> hermitian_coefficients(const GeneratorBasis& basis,
                                           const ComplexMatrix& h) {
  const int d = basis.local_dim();
  if (h.rows() != d || h.cols() != d) {
    throw Error(ErrorCode::kValidation, "matrix size does not match basis dimension");
  }
  std::vector<double> out(basis.size() + 1);
  out[0] = h.trace().real() / d;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    // Tr(H G) = sum_ab H_ab G_ba
    out[i + 1] = (h.cwiseProduct(basis[i].transpose())).sum().real() / 2.0;
  }
  return out;
}

ComplexMatrix from_hermitian_coefficients(const GeneratorBasis& basis,
                                          std::span<const double> coefficients) {
  if (coefficients.size() != basis.size() + 1) {
    throw Error(ErrorCode::kValidation, "expected d^2 coefficients");
  }
  const int d = basis.local_dim();
  ComplexMatrix h = ComplexMatrix::Identity(d, d) * coefficients[0];
  for (std::size_t i = 0; i < basis.size(); ++i) h += coefficients[i + 1] * basis[i];
  return h;
}

}  // namespace blochnorm
