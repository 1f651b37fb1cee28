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
#ifndef BLOCHNORM_BOUNDS_HPP_
#define BLOCHNORM_BOUNDS_HPP_

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "blochnorm/quantum_states.hpp"
#include "blochnorm/types.hpp"

namespace blochnorm {

/// Closed-form upper bounds on squared correlation-tensor norms for local
/// dimension d.
struct BoundTable {
  int local_dim;
  double bipartite;    ///< ||T^(xy)||^2  <= 4(d^2-1)/d^2
  double tripartite;   ///< ||T^(xyz)||^2 <= (8d^3 - 24d + 16)/d^3
  double fourpartite;  ///< ||T^(1234)||^2 <= 16(d^2-1)^2/d^4
  double tradeoff;     ///< sum_{x<y<z} ||T^(xyz)||^2 <= 8(d^2-1)^3/(d^3(d^2-2))
  double ball_inner;   ///< r
  double ball_outer;   ///< R
};

BoundTable bound_table(int d);

/// The four partition classes of four-party biseparability. Thresholds
/// nest as 1-1-1-1 <= 1-1-2 <= 1-3 <= 2-2.
enum class SeparabilityClass { k13, k22, k112, k1111 };

inline constexpr std::array<SeparabilityClass, 4> kSeparabilityClasses = {
    SeparabilityClass::k13, SeparabilityClass::k22, SeparabilityClass::k112,
    SeparabilityClass::k1111};

/// "1-1-1-1", "1-1-2", "1-3", "2-2".
std::string_view label(SeparabilityClass c);
std::optional<SeparabilityClass> parse_separability_class(std::string_view text);

/// Largest ||T^(1234)||^2 compatible with each separability class.
struct SeparabilityThresholds {
  int local_dim;
  double t13;    ///< 16(d-1)(d^3-3d+2)/d^4
  double t22;    ///< 16(d^2-1)^2/d^4
  double t112;   ///< 16(d^2-1)(d-1)^2/d^4
  double t1111;  ///< 16(d-1)^4/d^4

  double operator[](SeparabilityClass c) const;
};

SeparabilityThresholds separability_thresholds(int d);

inline constexpr std::string_view kNecessaryOnlyNote =
    "Exclusions follow from necessary conditions on ||T^(1234)||^2 only; a "
    "class that is not excluded is merely compatible, and no state is ever "
    "certified separable.";

struct ClassificationReport {
  double norm_sq_1234;
  SeparabilityThresholds thresholds;
  double tolerance;
  /// norm_sq_1234 - threshold, indexed like kSeparabilityClasses.
  std::array<double, 4> margins;
  /// Classes whose margin exceeds the tolerance, in kSeparabilityClasses order.
  std::vector<SeparabilityClass> excluded;
  std::string_view note = kNecessaryOnlyNote;

  bool is_excluded(SeparabilityClass c) const;
  double margin(SeparabilityClass c) const;
};

/// Throws Error(kUnsupportedInput) unless rho has four parties.
ClassificationReport classify(const DensityMatrix& rho, double tolerance = tol::kCompare);
/// Classification from a precomputed ||T^(1234)||^2.
ClassificationReport classify_norm(double norm_sq_1234, int d, double tolerance = tol::kCompare);

/// E_T = (d^N / 2^N) ||T^(N)|| - (d(d-1)/2)^(N/2), raw (may be negative).
/// Requires N in {2, 3, 4}.
double et_measure(const PureState& psi);
/// Accepts a density matrix only if it is pure (Tr rho^2 = 1 within
/// tol::kState); otherwise throws Error(kUnsupportedInput).
double et_measure(const DensityMatrix& rho);

/// Closed forms: sqrt(d^3 (d-1)^2 / 8) (sqrt(d+2) - sqrt(d-1)) for N = 3,
/// d^2 (d-1)/2 for N = 4. Throws Error(kConfiguration) for other N.
double et_upper_bound(int d, int n);
/// The same bound obtained by inserting the tripartite / fourpartite norm
/// bound into the E_T formula.
double et_upper_bound_from_norm_bound(int d, int n);

struct TradeoffResult {
  std::array<double, 4> triple_norm_sq;  ///< T^(123), T^(124), T^(134), T^(234)
  double sum_sq;
  double bound;
  bool satisfied;
};

/// Throws Error(kUnsupportedInput) unless rho has four parties.
TradeoffResult tradeoff_check(const DensityMatrix& rho, double tolerance = tol::kCompare);

}  // namespace blochnorm

#endif  // BLOCHNORM_BOUNDS_HPP_
