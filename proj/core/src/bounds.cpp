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
#include "blochnorm/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "blochnorm/bloch_decomposition.hpp"
#include "blochnorm/error.hpp"

namespace blochnorm {
namespace {

void check_dim(int d) {
  if (d < 2) {
    throw Error(ErrorCode::kInvalidDimension, "local dimension must be >= 2, got " + std::to_string(d));
  }
}

void require_four_parties(const DensityMatrix& rho, const char* what) {
  if (rho.num_parties() != 4) {
    throw Error(ErrorCode::kUnsupportedInput, std::string(what) + " needs a four-party state, got " +
                                                  std::to_string(rho.num_parties()) + " parties");
  }
}

std::size_t class_index(SeparabilityClass c) { return static_cast<std::size_t>(c); }

}  // namespace

BoundTable bound_table(int d) {
  check_dim(d);
  const double x = d;
  const double x2 = x * x;
  const double x3 = x2 * x;
  const double x4 = x2 * x2;
  BoundTable t{};
  t.local_dim = d;
  t.bipartite = 4.0 * (x2 - 1.0) / x2;
  t.tripartite = (8.0 * x3 - 24.0 * x + 16.0) / x3;
  t.fourpartite = 16.0 * (x2 - 1.0) * (x2 - 1.0) / x4;
  t.tradeoff = 8.0 * std::pow(x2 - 1.0, 3) / (x3 * (x2 - 2.0));
  t.ball_inner = bloch_inner_radius(d);
  t.ball_outer = bloch_outer_radius(d);
  return t;
}

std::string_view label(SeparabilityClass c) {
  switch (c) {
    case SeparabilityClass::k13: return "1-3";
    case SeparabilityClass::k22: return "2-2";
    case SeparabilityClass::k112: return "1-1-2";
    case SeparabilityClass::k1111: return "1-1-1-1";
  }
  return "?";
}

std::optional<SeparabilityClass> parse_separability_class(std::string_view text) {
  for (SeparabilityClass c : kSeparabilityClasses) {
    if (label(c) == text) return c;
  }
  return std::nullopt;
}

double SeparabilityThresholds::operator[](SeparabilityClass c) const {
  switch (c) {
    case SeparabilityClass::k13: return t13;
    case SeparabilityClass::k22: return t22;
    case SeparabilityClass::k112: return t112;
    case SeparabilityClass::k1111: return t1111;
  }
  return 0.0;
}

SeparabilityThresholds separability_thresholds(int d) {
  check_dim(d);
  const double x = d;
  const double x4 = x * x * x * x;
  const double k = 16.0 / x4;
  SeparabilityThresholds t{};
  t.local_dim = d;
  t.t13 = k * ((x - 1.0) * (x * x * x - 3.0 * x + 2.0));
  t.t22 = k * (x * x - 1.0) * (x * x - 1.0);
  t.t112 = k * (x * x - 1.0) * (x - 1.0) * (x - 1.0);
  t.t1111 = k * std::pow(x - 1.0, 4);
  return t;
}

bool ClassificationReport::is_excluded(SeparabilityClass c) const {
  return std::find(excluded.begin(), excluded.end(), c) != excluded.end();
}

double ClassificationReport::margin(SeparabilityClass c) const { return margins[class_index(c)]; }

ClassificationReport classify_norm(double norm_sq_1234, int d, double tolerance) {
  if (!(tolerance > 0.0)) throw Error(ErrorCode::kConfiguration, "tolerance must be positive");
  ClassificationReport r{};
  r.norm_sq_1234 = norm_sq_1234;
  r.thresholds = separability_thresholds(d);
  r.tolerance = tolerance;
  for (SeparabilityClass c : kSeparabilityClasses) {
    const double margin = norm_sq_1234 - r.thresholds[c];
    r.margins[class_index(c)] = margin;
    if (margin > tolerance) r.excluded.push_back(c);
  }
  return r;
}

ClassificationReport classify(const DensityMatrix& rho, double tolerance) {
  require_four_parties(rho, "classification");
  const double norm_sq = bloch_tensor(rho, PartySet::all(4)).norm_sq();
  return classify_norm(norm_sq, rho.local_dim(), tolerance);
}

double et_measure(const PureState& psi) { return et_measure(from_pure(psi)); }

double et_measure(const DensityMatrix& rho) {
  const int n = rho.num_parties();
  if (n < 2) throw Error(ErrorCode::kUnsupportedInput, "E_T needs at least two parties");
  const double p = purity(rho);
  if (std::abs(p - 1.0) > tol::kState) {
    throw Error(ErrorCode::kUnsupportedInput,
                "E_T is defined for pure states only (purity " + std::to_string(p) + ")");
  }
  const double d = rho.local_dim();
  const double norm = std::sqrt(bloch_tensor(rho, PartySet::all(n)).norm_sq());
  return std::pow(d / 2.0, n) * norm - std::pow(d * (d - 1.0) / 2.0, n / 2.0);
}

double et_upper_bound(int d, int n) {
  check_dim(d);
  const double x = d;
  if (n == 3) {
    return std::sqrt(x * x * x * (x - 1.0) * (x - 1.0) / 8.0) * (std::sqrt(x + 2.0) - std::sqrt(x - 1.0));
  }
  if (n == 4) return x * x * (x - 1.0) / 2.0;
  throw Error(ErrorCode::kConfiguration, "E_T upper bound is available for N = 3 or 4 only");
}

double et_upper_bound_from_norm_bound(int d, int n) {
  const BoundTable t = bound_table(d);
  double norm_sq_bound = 0.0;
  if (n == 3) {
    norm_sq_bound = t.tripartite;
  } else if (n == 4) {
    norm_sq_bound = t.fourpartite;
  } else {
    throw Error(ErrorCode::kConfiguration, "E_T upper bound is available for N = 3 or 4 only");
  }
  const double x = d;
  return std::pow(x / 2.0, n) * std::sqrt(norm_sq_bound) - std::pow(x * (x - 1.0) / 2.0, n / 2.0);
}

TradeoffResult tradeoff_check(const DensityMatrix& rho, double tolerance) {
  require_four_parties(rho, "trade-off check");
  if (!(tolerance > 0.0)) throw Error(ErrorCode::kConfiguration, "tolerance must be positive");
  const BlochDecomposition decomposition = full_decomposition(rho);
  TradeoffResult r{};
  const PartySet triples[4] = {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
  r.sum_sq = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    r.triple_norm_sq[i] = decomposition.at(triples[i]).norm_sq();
    r.sum_sq += r.triple_norm_sq[i];
  }
  r.bound = bound_table(rho.local_dim()).tradeoff;
  r.satisfied = r.sum_sq <= r.bound + tolerance;
  return r;
}

}  // namespace blochnorm
