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
#ifndef BLOCHNORM_VERIFICATION_HPP_
#define BLOCHNORM_VERIFICATION_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "blochnorm/bounds.hpp"
#include "blochnorm/party_set.hpp"
#include "blochnorm/quantum_states.hpp"

namespace blochnorm {

// Random streams are counter based: the n-th 64-bit word of the stream keyed
// by k is splitmix64_mix(k + (n + 1) * 0x9E3779B97F4A7C15). Uniform doubles
// take the top 53 bits; Gaussians come from Box-Muller on consecutive
// uniforms. This layout is part of the reproducibility contract and changes
// only with a version bump.

std::uint64_t splitmix64_mix(std::uint64_t z) noexcept;

/// Per-sample key derived from a base seed and a sample index.
std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index) noexcept;

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) noexcept : key_(key) {}

  std::uint64_t next_u64() noexcept;
  /// Uniform on the open interval (0, 1).
  double uniform() noexcept;
  /// Standard normal.
  double gaussian() noexcept;
  /// Re and Im independently N(0, 1/2), so E|z|^2 = 1.
  Complex complex_gaussian() noexcept;
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) noexcept;

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Haar-random pure state: normalized vector of i.i.d. complex Gaussians.
PureState haar_random_pure(int d, int n, std::uint64_t seed);

/// Ginibre density matrix G G^dagger / Tr(G G^dagger), G of size d^n x rank.
/// Throws Error(kConfiguration) unless 1 <= rank <= d^n.
DensityMatrix random_mixed(int d, int n, int rank, std::uint64_t seed);

/// The pure-product partitions that define each four-party class: every
/// inner vector is one admissible split of {1,2,3,4} into blocks.
const std::vector<std::vector<PartySet>>& class_partitions(SeparabilityClass c);

/// Convex mixture of `members` pure product states. Each member picks one
/// partition of the class uniformly and draws every block Haar-independently;
/// weights are uniform on the simplex (sorted-uniform spacings).
DensityMatrix random_separable(int d, SeparabilityClass c, int members, std::uint64_t seed);

enum class SampleKind { kPureHaar, kMixedGinibre };

std::string_view to_string(SampleKind kind);
SampleKind parse_sample_kind(std::string_view text);

struct SampleSpec {
  int local_dim = 2;
  int num_parties = 4;
  SampleKind kind = SampleKind::kPureHaar;
  int rank = 1;  ///< Ginibre rank; ignored for pure-haar.
  int count = 100;
  std::uint64_t base_seed = 0;
};

/// Throws Error(kConfiguration) when the spec violates its invariants.
void validate(const SampleSpec& spec);

struct CheckResult {
  std::string name;
  int samples = 0;
  double max_value = 0.0;
  double bound = 0.0;
  double worst_margin = 0.0;  ///< max over samples of (value - bound)
  double tolerance = 0.0;
  bool passed = true;
};

struct SweepReport {
  SampleSpec spec;
  std::vector<CheckResult> checks;
  bool passed = true;
};

struct SweepOptions {
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Tolerance for the bound and identity checks. The round-trip check
  /// always uses 1e-10.
  double tolerance = tol::kCompare;
};

/// Every check name the sweep understands.
std::vector<std::string> all_check_names();
/// Checks applicable to the spec's arity and sample kind.
std::vector<std::string> applicable_checks(const SampleSpec& spec);

/// Runs every named check on every sample. Samples are generated from
/// derive_seed(base_seed, i); the report is identical for any thread count.
/// Throws Error(kConfiguration) for unknown or inapplicable checks, or an
/// empty list.
SweepReport run_sweep(const SampleSpec& spec, std::span<const std::string> checks,
                      const SweepOptions& options = {});

}  // namespace blochnorm

#endif  // BLOCHNORM_VERIFICATION_HPP_
