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
#include <random>

#include <gtest/gtest.h>

#include "blochnorm/error.hpp"
#include "blochnorm/su_basis.hpp"
#include "blochnorm/verification.hpp"
#include "oracle/oracle.hpp"

namespace blochnorm {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kParse;
}

std::vector<oracle::Mat> generators(int d) {
  const GeneratorBasis b = generate_basis(d);
  return {b.generators().begin(), b.generators().end()};
}

// Tr(rho^2) rebuilt from the tensor norms with weights (d/2)^|S|.
double purity_from_norms(const BlochDecomposition& dec) {
  const double d = dec.local_dim();
  double sum = 1.0;
  for (int k = 1; k <= dec.num_parties(); ++k) sum += std::pow(d / 2.0, k) * dec.norm_sq_sum(k);
  return sum / std::pow(d, dec.num_parties());
}

TEST(BlochTensorTest, MaximallyMixedHasZeroTensors) {
  for (auto [d, n] : {std::pair{2, 2}, {3, 3}, {2, 4}}) {
    const auto dim = static_cast<Eigen::Index>(ipow(d, n));
    const DensityMatrix rho(d, n, ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
    for (PartySet s : nonempty_subsets(n)) {
      const BlochTensor t = bloch_tensor(rho, s);
      for (double c : t.coefficients()) EXPECT_EQ(c, 0.0);
    }
  }
}

TEST(BlochTensorTest, KetZeroPointsAlongZ) {
  const int zero[1] = {0};
  const BlochTensor t = bloch_tensor(from_pure(computational_basis_state(2, zero)), {1});
  ASSERT_EQ(t.coefficients().size(), 3u);
  EXPECT_NEAR(t.coefficients()[0], 0.0, 1e-15);
  EXPECT_NEAR(t.coefficients()[1], 0.0, 1e-15);
  EXPECT_NEAR(t.coefficients()[2], 1.0, 1e-15);
}

TEST(BlochTensorTest, Ghz4FullCorrelationNorm) {
  const BlochTensor t = bloch_tensor(from_pure(ghz(2, 4)), PartySet::all(4));
  EXPECT_EQ(t.coefficients().size(), 81u);
  EXPECT_NEAR(t.norm_sq(), 9.0, 1e-12);
  EXPECT_NEAR(tensor_norm_sq(t), 9.0, 1e-12);
  // ZZZZ is coefficient (2,2,2,2)
  const int zzzz[4] = {2, 2, 2, 2};
  EXPECT_NEAR(t.at(zzzz), 1.0, 1e-14);
  const int xxxx[4] = {0, 0, 0, 0};
  EXPECT_NEAR(t.at(xxxx), 1.0, 1e-14);
}

TEST(BlochTensorTest, Ghz4MarginalNormsMatchOracle) {
  const DensityMatrix rho = from_pure(ghz(2, 4));
  const auto gens = oracle::pauli();
  for (PartySet s : nonempty_subsets(4)) {
    const double fast = bloch_tensor(rho, s).norm_sq();
    const double brute = oracle::tensor_norm_sq(rho.matrix(), 4, gens, s.parties());
    const double expected = s.size() == 2 ? 1.0 : (s.size() == 4 ? 9.0 : 0.0);
    EXPECT_NEAR(fast, expected, 1e-12) << s.label();
    EXPECT_NEAR(brute, expected, 1e-12) << s.label();
  }
}

TEST(BlochTensorTest, IsotropicScalesLinearly) {
  const BlochTensor pure = bloch_tensor(from_pure(ghz(2, 4)), PartySet::all(4));
  for (double x : {0.0, 0.3, 0.7, 1.0}) {
    const BlochTensor t = bloch_tensor(isotropic_ghz4(x, 2), PartySet::all(4));
    for (std::size_t i = 0; i < t.coefficients().size(); ++i) {
      EXPECT_NEAR(t.coefficients()[i], x * pure.coefficients()[i], 1e-14);
    }
    EXPECT_NEAR(t.norm_sq(), 9.0 * x * x, 1e-12);
  }
}

TEST(BlochTensorTest, ProductOfMaximallyEntangledPairs) {
  EXPECT_NEAR(bloch_tensor(from_pure(product_max_entangled(2)), PartySet::all(4)).norm_sq(), 9.0, 1e-12);
  EXPECT_NEAR(bloch_tensor(from_pure(product_max_entangled(3)), PartySet::all(4)).norm_sq(), 1024.0 / 81.0,
              1e-11);
}

TEST(BlochTensorTest, FastPathMatchesNaivePath) {
  for (auto [d, n] : {std::pair{2, 2}, {3, 2}, {2, 3}, {3, 3}, {4, 2}, {2, 4}, {3, 4}}) {
    const DensityMatrix rho = random_mixed(d, n, 2, 17 + d * 10 + n);
    for (PartySet s : nonempty_subsets(n)) {
      if (d == 3 && n == 4 && s.size() < 3) continue;  // the naive path is slow here
      const auto fast = bloch_tensor(rho, s).coefficients();
      const auto naive = bloch_tensor_naive(rho, s).coefficients();
      ASSERT_EQ(fast.size(), naive.size());
      for (std::size_t i = 0; i < fast.size(); ++i) EXPECT_NEAR(fast[i], naive[i], 1e-12);
    }
  }
}

TEST(BlochTensorTest, MatchesOracleWithTextbookGellMann) {
  // Same generator set in a different order, so norms agree.
  const DensityMatrix rho = random_mixed(3, 2, 3, 5);
  const auto gens = oracle::gell_mann_textbook();
  for (PartySet s : nonempty_subsets(2)) {
    EXPECT_NEAR(bloch_tensor(rho, s).norm_sq(), oracle::tensor_norm_sq(rho.matrix(), 2, gens, s.parties()),
                1e-12);
  }
}

TEST(BlochTensorTest, RejectsInvalidInput) {
  const DensityMatrix rho = from_pure(ghz(2, 3));
  EXPECT_EQ(code_of([&] { bloch_tensor(rho, {4}); }), ErrorCode::kInvalidSubset);
  EXPECT_EQ(code_of([&] { bloch_tensor(rho, PartySet()); }), ErrorCode::kInvalidSubset);
  EXPECT_EQ(code_of([] { BlochTensor({1, 2}, 2, std::vector<double>(8)); }), ErrorCode::kValidation);
}

TEST(DecompositionTest, TensorCounts) {
  EXPECT_EQ(full_decomposition(from_pure(haar_random_pure(3, 1, 1))).size(), 1u);
  const BlochDecomposition dec = full_decomposition(from_pure(ghz(2, 4)));
  EXPECT_EQ(dec.size(), 15u);
  EXPECT_TRUE(dec.complete());
  const auto ordered = dec.tensors();
  ASSERT_EQ(ordered.size(), 15u);
  EXPECT_EQ(ordered.front()->subset().label(), "1");
  EXPECT_EQ(ordered.back()->subset().label(), "1234");
  for (std::size_t i = 1; i < ordered.size(); ++i) {
    EXPECT_LT(ordered[i - 1]->subset(), ordered[i]->subset());
  }
}

TEST(DecompositionTest, PurityIdentity) {
  for (auto [d, n] : {std::pair{2, 2}, {3, 2}, {2, 3}, {3, 3}, {2, 4}, {3, 4}}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const int rank = 1 + static_cast<int>(seed % ipow(d, n));
      const DensityMatrix mixed = random_mixed(d, n, rank, seed);
      EXPECT_NEAR(purity_from_norms(full_decomposition(mixed)), purity(mixed), 1e-12);
    }
  }
}

TEST(DecompositionTest, PureTripartiteRelation) {
  for (int d : {2, 3, 4}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const BlochDecomposition dec = full_decomposition(from_pure(haar_random_pure(d, 3, seed)));
      const double a = dec.norm_sq_sum(1);
      const double b = dec.norm_sq_sum(2);
      EXPECT_NEAR(b / 4.0, (0.5 - 1.0 / d) * a + 3.0 / d - 3.0 / (d * d), 1e-10) << d;
    }
  }
}

TEST(DecompositionTest, PureFourPartiteRelation) {
  for (int d : {2, 3}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const BlochDecomposition dec = full_decomposition(from_pure(haar_random_pure(d, 4, seed)));
      const double a = dec.norm_sq_sum(1);
      const double b = dec.norm_sq_sum(2);
      const double c = dec.norm_sq_sum(3);
      const double rhs = (2.0 * d * d - 2.0) / std::pow(d, 4) + (d * d - 3.0) * a / (4.0 * d * d * d) -
                         c / (16.0 * d);
      EXPECT_NEAR(b / (4.0 * d * d), rhs, 1e-10) << d;
    }
  }
}

TEST(DecompositionTest, MarginalTensorsAgreeWithReducedState) {
  const DensityMatrix rho = random_mixed(2, 4, 3, 8);
  const PartySet keep{2, 4};
  const DensityMatrix reduced = partial_trace(rho, keep);
  const auto full = bloch_tensor(rho, keep).coefficients();
  const auto local = bloch_tensor(reduced, PartySet::all(2)).coefficients();
  ASSERT_EQ(full.size(), local.size());
  for (std::size_t i = 0; i < full.size(); ++i) EXPECT_NEAR(full[i], local[i], 1e-14);
}

TEST(DecompositionTest, NormsInvariantUnderLocalUnitaries) {
  std::mt19937_64 gen(4);
  for (int d : {2, 3}) {
    const DensityMatrix rho = random_mixed(d, 3, 2, 11);
    std::vector<oracle::Mat> us;
    for (int i = 0; i < 3; ++i) us.push_back(oracle::random_unitary(d, gen));
    const oracle::Mat u = oracle::kron_all(us);
    const DensityMatrix rotated(d, 3, u * rho.matrix() * u.adjoint());
    for (PartySet s : nonempty_subsets(3)) {
      EXPECT_NEAR(bloch_tensor(rho, s).norm_sq(), bloch_tensor(rotated, s).norm_sq(), 1e-11) << s.label();
    }
  }
}

TEST(ReconstructTest, ZeroTensorsGiveMaximallyMixed) {
  BlochDecomposition dec(2, 2);
  for (PartySet s : nonempty_subsets(2)) {
    dec.set(BlochTensor(s, 2, std::vector<double>(ipow(3, s.size()), 0.0)));
  }
  EXPECT_LT((reconstruct(dec).matrix() - ComplexMatrix::Identity(4, 4) / 4.0).cwiseAbs().maxCoeff(), 1e-16);
}

TEST(ReconstructTest, RoundTrips) {
  const DensityMatrix g = from_pure(ghz(3, 3));
  EXPECT_LT((reconstruct(full_decomposition(g)).matrix() - g.matrix()).norm(), 1e-12);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const DensityMatrix rho = seed % 2 ? random_mixed(2, 4, 4, seed) : from_pure(haar_random_pure(2, 4, seed));
    EXPECT_LT((reconstruct_matrix(full_decomposition(rho)) - rho.matrix()).norm(), 1e-10) << seed;
  }
}

TEST(ReconstructTest, RejectsIncompleteAndInvalid) {
  BlochDecomposition dec(2, 2);
  dec.set(BlochTensor({1}, 2, {0.0, 0.0, 1.0}));
  EXPECT_FALSE(dec.complete());
  EXPECT_EQ(code_of([&] { reconstruct(dec); }), ErrorCode::kValidation);
  EXPECT_EQ(code_of([&] { dec.set(BlochTensor({3}, 2, {0.0, 0.0, 1.0})); }), ErrorCode::kInvalidSubset);
  EXPECT_EQ(code_of([&] { dec.set(BlochTensor({1}, 3, std::vector<double>(8))); }), ErrorCode::kValidation);

  // A valid-looking but non-positive operator: single Bloch vector of length 2.
  BlochDecomposition bad(2, 1);
  bad.set(BlochTensor({1}, 2, {0.0, 0.0, 2.0}));
  EXPECT_EQ(code_of([&] { reconstruct(bad); }), ErrorCode::kValidation);
}

TEST(BlochBallTest, PureStatesSitOnOuterSphere) {
  for (int d = 2; d <= 5; ++d) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const BlochTensor t = bloch_tensor(from_pure(haar_random_pure(d, 1, seed)), {1});
      EXPECT_NEAR(std::sqrt(t.norm_sq()), bloch_outer_radius(d), 1e-12);
    }
  }
  EXPECT_NEAR(bloch_outer_radius(2), 1.0, 1e-15);
  EXPECT_NEAR(bloch_inner_radius(2), 1.0, 1e-15);
  EXPECT_NEAR(bloch_outer_radius(3), std::sqrt(4.0 / 3.0), 1e-15);
  EXPECT_NEAR(bloch_inner_radius(3), std::sqrt(1.0 / 3.0), 1e-15);
}

TEST(BlochBallTest, InnerBallIsPositive) {
  CounterRng rng(42);
  for (int d = 2; d <= 5; ++d) {
    const std::size_t m = static_cast<std::size_t>(d * d - 1);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<double> v(m);
      double norm = 0.0;
      for (double& x : v) {
        x = rng.gaussian();
        norm += x * x;
      }
      const double scale = bloch_inner_radius(d) * rng.uniform() / std::sqrt(norm);
      for (double& x : v) x *= scale;
      EXPECT_GT(oracle::eigenvalues(single_qudit_matrix(d, v)).minCoeff(), -1e-12);
    }
  }
}

TEST(BlochBallTest, MixturesStayInsideAndAreConvex) {
  for (int d = 2; d <= 4; ++d) {
    const DensityMatrix a = from_pure(haar_random_pure(d, 1, 1));
    const DensityMatrix b = from_pure(haar_random_pure(d, 1, 2));
    const auto ta = bloch_tensor(a, {1}).coefficients();
    const auto tb = bloch_tensor(b, {1}).coefficients();
    const DensityMatrix mix(d, 1, 0.25 * a.matrix() + 0.75 * b.matrix());
    const BlochTensor tm = bloch_tensor(mix, {1});
    for (std::size_t i = 0; i < ta.size(); ++i) {
      EXPECT_NEAR(tm.coefficients()[i], 0.25 * ta[i] + 0.75 * tb[i], 1e-14);
    }
    EXPECT_LE(std::sqrt(tm.norm_sq()), bloch_outer_radius(d) + 1e-12);
  }
}

TEST(CorrelationCoefficientsTest, LayoutAndIdentitySlot) {
  const DensityMatrix rho = random_mixed(2, 2, 2, 3);
  const auto w = correlation_coefficients(rho);
  ASSERT_EQ(w.size(), 16u);
  EXPECT_NEAR(w[0], 1.0, 1e-14);
  // slot (0, k) is the single-party tensor of party 2
  const auto t2 = bloch_tensor(rho, {2}).coefficients();
  for (int k = 1; k < 4; ++k) EXPECT_NEAR(w[static_cast<std::size_t>(k)], t2[k - 1], 1e-14);
}

}  // namespace
}  // namespace blochnorm
