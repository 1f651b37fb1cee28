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
#include "blochnorm/verification.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "blochnorm/bloch_decomposition.hpp"
#include "blochnorm/error.hpp"
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

TEST(RngTest, DeterministicAndKeyed) {
  CounterRng a(7);
  CounterRng b(7);
  CounterRng c(8);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next_u64();
    EXPECT_EQ(x, b.next_u64());
    EXPECT_NE(x, c.next_u64());
  }
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
  EXPECT_EQ(derive_seed(5, 9), derive_seed(5, 9));
}

TEST(RngTest, UniformAndGaussianMoments) {
  CounterRng rng(123);
  const int n = 100000;
  double su = 0.0;
  double sg = 0.0;
  double sg2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    su += u;
    const double g = rng.gaussian();
    sg += g;
    sg2 += g * g;
  }
  EXPECT_NEAR(su / n, 0.5, 0.01);
  EXPECT_NEAR(sg / n, 0.0, 0.02);
  EXPECT_NEAR(sg2 / n, 1.0, 0.02);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(rng.below(7), 7u);
}

TEST(HaarTest, DeterministicAndNormalized) {
  for (int d = 2; d <= 4; ++d) {
    for (int n = 1; n <= 4; ++n) {
      if (ipow(d, n) > 256) continue;
      const PureState a = haar_random_pure(d, n, 31);
      const PureState b = haar_random_pure(d, n, 31);
      EXPECT_EQ(a.amplitudes(), b.amplitudes());
      EXPECT_NEAR(a.amplitudes().norm(), 1.0, 1e-13);
      EXPECT_NE(a.amplitudes(), haar_random_pure(d, n, 32).amplitudes());
    }
  }
  EXPECT_EQ(code_of([] { haar_random_pure(1, 2, 0); }), ErrorCode::kInvalidDimension);
  EXPECT_EQ(code_of([] { haar_random_pure(2, 5, 0); }), ErrorCode::kInvalidDimension);
}

TEST(HaarTest, BlochVectorIsIsotropic) {
  for (int d : {2, 3}) {
    const int m = d * d - 1;
    const int samples = 10000;
    std::vector<double> mean(static_cast<std::size_t>(m), 0.0);
    std::vector<double> second(static_cast<std::size_t>(m), 0.0);
    for (int s = 0; s < samples; ++s) {
      const auto t = bloch_tensor(from_pure(haar_random_pure(d, 1, derive_seed(77, s))), {1}).coefficients();
      for (int i = 0; i < m; ++i) {
        mean[i] += t[i] / samples;
        second[i] += t[i] * t[i] / samples;
      }
    }
    const double r2 = std::pow(bloch_outer_radius(d), 2);
    for (int i = 0; i < m; ++i) {
      EXPECT_NEAR(mean[i], 0.0, 0.03) << d << " " << i;
      EXPECT_NEAR(second[i], r2 / m, 0.03) << d << " " << i;
    }
  }
}

TEST(GinibreTest, RankOneIsPure) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    EXPECT_NEAR(purity(random_mixed(2, 3, 1, seed)), 1.0, 1e-12);
  }
}

TEST(GinibreTest, RankControlsSpectrum) {
  const DensityMatrix rho = random_mixed(2, 3, 3, 4);
  const Eigen::VectorXd ev = oracle::eigenvalues(rho.matrix());
  int positive = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) positive += ev(i) > 1e-10 ? 1 : 0;
  EXPECT_EQ(positive, 3);
  EXPECT_EQ(code_of([] { random_mixed(2, 2, 0, 0); }), ErrorCode::kConfiguration);
  EXPECT_EQ(code_of([] { random_mixed(2, 2, 5, 0); }), ErrorCode::kConfiguration);
}

TEST(GinibreTest, FullRankMeanIsMaximallyMixed) {
  ComplexMatrix mean = ComplexMatrix::Zero(4, 4);
  const int samples = 4000;
  for (int s = 0; s < samples; ++s) mean += random_mixed(2, 2, 4, derive_seed(3, s)).matrix() / samples;
  EXPECT_LT((mean - ComplexMatrix::Identity(4, 4) / 4.0).cwiseAbs().maxCoeff(), 0.01);
}

TEST(SeparableTest, PartitionsCoverAllParties) {
  const std::size_t expected[4] = {4, 3, 6, 1};
  for (std::size_t ci = 0; ci < 4; ++ci) {
    const auto& parts = class_partitions(kSeparabilityClasses[ci]);
    EXPECT_EQ(parts.size(), expected[ci]);
    std::set<unsigned> seen;
    for (const auto& blocks : parts) {
      unsigned mask = 0;
      for (PartySet b : blocks) {
        EXPECT_EQ(mask & b.mask(), 0u);
        mask |= b.mask();
      }
      EXPECT_EQ(mask, PartySet::all(4).mask());
      unsigned key = 0;
      for (PartySet b : blocks) key = key * 16 + b.mask();
      EXPECT_TRUE(seen.insert(key).second);
    }
  }
}

TEST(SeparableTest, MixturesAreValidAndRespectThresholds) {
  for (int d : {2, 3}) {
    for (SeparabilityClass c : kSeparabilityClasses) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const DensityMatrix rho = random_separable(d, c, 8, seed);
        EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-12);
        EXPECT_LE(bloch_tensor(rho, PartySet::all(4)).norm_sq(), separability_thresholds(d)[c] + 1e-9);
      }
      EXPECT_EQ(random_separable(d, c, 4, 9).matrix(), random_separable(d, c, 4, 9).matrix());
    }
  }
  EXPECT_EQ(code_of([] { random_separable(2, SeparabilityClass::k22, 0, 0); }), ErrorCode::kConfiguration);
}

TEST(SweepTest, PureQubitSweepPasses) {
  const SampleSpec spec{2, 4, SampleKind::kPureHaar, 1, 50, 1};
  const auto checks = applicable_checks(spec);
  const SweepReport report = run_sweep(spec, checks);
  EXPECT_TRUE(report.passed);
  ASSERT_EQ(report.checks.size(), checks.size());
  for (const CheckResult& r : report.checks) {
    EXPECT_TRUE(r.passed) << r.name;
    EXPECT_EQ(r.samples, 50) << r.name;
    EXPECT_LE(r.worst_margin, r.tolerance) << r.name;
  }
}

TEST(SweepTest, MixedSweepPasses) {
  const SampleSpec spec{3, 3, SampleKind::kMixedGinibre, 4, 30, 2};
  const SweepReport report = run_sweep(spec, applicable_checks(spec));
  EXPECT_TRUE(report.passed);
}

TEST(SweepTest, ApplicabilityFollowsKindAndParties) {
  const auto pure4 = applicable_checks({2, 4, SampleKind::kPureHaar, 1, 1, 0});
  const auto mixed4 = applicable_checks({2, 4, SampleKind::kMixedGinibre, 2, 1, 0});
  const auto pure2 = applicable_checks({2, 2, SampleKind::kPureHaar, 1, 1, 0});
  auto has = [](const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
  };
  EXPECT_TRUE(has(pure4, "pure-ABC-relation"));
  EXPECT_FALSE(has(pure4, "pure-AB-relation"));
  EXPECT_FALSE(has(mixed4, "pure-ABC-relation"));
  EXPECT_TRUE(has(mixed4, "theorem2"));
  EXPECT_FALSE(has(pure2, "theorem2"));
  EXPECT_TRUE(has(pure2, "bipartite"));
  for (const auto& name : pure4) EXPECT_TRUE(has(all_check_names(), name));
}

TEST(SweepTest, RejectsBadRequests) {
  const SampleSpec spec{2, 3, SampleKind::kMixedGinibre, 2, 5, 0};
  const std::vector<std::string> unknown{"no-such-check"};
  const std::vector<std::string> inapplicable{"pure-AB-relation"};
  const std::vector<std::string> four{"theorem2"};
  EXPECT_EQ(code_of([&] { run_sweep(spec, unknown); }), ErrorCode::kConfiguration);
  EXPECT_EQ(code_of([&] { run_sweep(spec, inapplicable); }), ErrorCode::kConfiguration);
  EXPECT_EQ(code_of([&] { run_sweep(spec, four); }), ErrorCode::kConfiguration);
  EXPECT_EQ(code_of([&] { run_sweep(spec, {}); }), ErrorCode::kConfiguration);
  EXPECT_EQ(code_of([] { validate({2, 3, SampleKind::kPureHaar, 1, 0, 0}); }), ErrorCode::kConfiguration);
  EXPECT_EQ(code_of([] { validate({2, 2, SampleKind::kMixedGinibre, 9, 1, 0}); }), ErrorCode::kConfiguration);
  EXPECT_EQ(code_of([] { parse_sample_kind("gaussian"); }), ErrorCode::kConfiguration);
  EXPECT_EQ(parse_sample_kind(to_string(SampleKind::kMixedGinibre)), SampleKind::kMixedGinibre);
}

TEST(SweepTest, ResultIndependentOfThreadCount) {
  const SampleSpec spec{2, 4, SampleKind::kMixedGinibre, 3, 40, 5};
  const auto checks = applicable_checks(spec);
  const SweepReport one = run_sweep(spec, checks, {1, tol::kCompare});
  const SweepReport four = run_sweep(spec, checks, {4, tol::kCompare});
  ASSERT_EQ(one.checks.size(), four.checks.size());
  for (std::size_t i = 0; i < one.checks.size(); ++i) {
    EXPECT_EQ(one.checks[i].max_value, four.checks[i].max_value) << one.checks[i].name;
    EXPECT_EQ(one.checks[i].worst_margin, four.checks[i].worst_margin) << one.checks[i].name;
  }
}

TEST(SweepTest, TinyToleranceFailsIdentityCheck) {
  const SampleSpec spec{3, 4, SampleKind::kMixedGinibre, 5, 5, 0};
  const std::vector<std::string> checks{"purity-decomposition"};
  const SweepReport report = run_sweep(spec, checks, {0, 1e-300});
  EXPECT_FALSE(report.passed);
}

}  // namespace
}  // namespace blochnorm
