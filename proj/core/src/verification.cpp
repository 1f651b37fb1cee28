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
#include <exception>
#include <functional>
#include <numbers>
#include <thread>

#include "blochnorm/bloch_decomposition.hpp"
#include "blochnorm/error.hpp"

namespace blochnorm {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

ComplexVector gaussian_vector(CounterRng& rng, Eigen::Index size) {
  ComplexVector v(size);
  for (Eigen::Index i = 0; i < size; ++i) v(i) = rng.complex_gaussian();
  return v;
}

// Everything a check may look at for one sample.
struct Sample {
  int d;
  int n;
  bool pure;
  std::uint64_t seed;
  const DensityMatrix* rho;
  const BlochDecomposition* decomposition;
};

struct CheckDef {
  std::string_view name;
  int min_parties;
  int max_parties;
  bool pure_only;
  bool fixed_tolerance;  // true: uses its own tolerance, not SweepOptions
  double tolerance;
  std::function<double(int d, int n)> bound;
  std::function<double(const Sample&)> value;
};

double max_norm_of_order(const BlochDecomposition& dec, int order) {
  double m = 0.0;
  for (const BlochTensor* t : dec.tensors()) {
    if (t->order() == order) m = std::max(m, t->norm_sq());
  }
  return m;
}

// Tr(rho_S^2) predicted from the tensors of the subsets of S.
double purity_from_tensors(const BlochDecomposition& dec, PartySet s, int d) {
  const int k = s.size();
  double total = std::pow(static_cast<double>(d), -k);
  for (const BlochTensor* t : dec.tensors()) {
    if ((t->subset().mask() & ~s.mask()) != 0) continue;
    const int m = t->order();
    total += t->norm_sq() / (std::pow(static_cast<double>(d), k - m) * std::pow(2.0, m));
  }
  return total;
}

double separable_value(const Sample& s, SeparabilityClass c, std::string_view salt_name) {
  const std::uint64_t key = derive_seed(s.seed, fnv1a(salt_name));
  const DensityMatrix rho = random_separable(s.d, c, 8, key);
  return bloch_tensor(rho, PartySet::all(4)).norm_sq();
}

const std::vector<CheckDef>& check_catalog() {
  static const std::vector<CheckDef> catalog = [] {
    std::vector<CheckDef> c;
    const double kTol = tol::kCompare;
    c.push_back({"ball", 1, 4, false, false, kTol,
                 [](int d, int) { return 2.0 * (1.0 - 1.0 / d); },
                 [](const Sample& s) { return max_norm_of_order(*s.decomposition, 1); }});
    c.push_back({"bipartite", 2, 4, false, false, kTol,
                 [](int d, int) { return bound_table(d).bipartite; },
                 [](const Sample& s) { return max_norm_of_order(*s.decomposition, 2); }});
    c.push_back({"theorem1", 3, 4, false, false, kTol,
                 [](int d, int) { return bound_table(d).tripartite; },
                 [](const Sample& s) { return max_norm_of_order(*s.decomposition, 3); }});
    c.push_back({"theorem2", 4, 4, false, false, kTol,
                 [](int d, int) { return bound_table(d).fourpartite; },
                 [](const Sample& s) { return max_norm_of_order(*s.decomposition, 4); }});
    c.push_back({"tradeoff", 4, 4, false, false, kTol,
                 [](int d, int) { return bound_table(d).tradeoff; },
                 [](const Sample& s) { return s.decomposition->norm_sq_sum(3); }});
    c.push_back({"purity-decomposition", 1, 4, false, false, kTol, [](int, int) { return 0.0; },
                 [](const Sample& s) {
                   const double predicted =
                       purity_from_tensors(*s.decomposition, PartySet::all(s.n), s.d);
                   return std::abs(predicted - purity(*s.rho));
                 }});
    c.push_back({"reduced-purity", 2, 4, false, false, kTol, [](int, int) { return 0.0; },
                 [](const Sample& s) {
                   double worst = 0.0;
                   for (PartySet sub : nonempty_subsets(s.n)) {
                     if (sub.size() == s.n) continue;
                     const double direct = purity(partial_trace(*s.rho, sub));
                     worst = std::max(worst,
                                      std::abs(direct - purity_from_tensors(*s.decomposition, sub, s.d)));
                   }
                   return worst;
                 }});
    c.push_back({"marginal-purity", 2, 4, true, false, kTol, [](int, int) { return 0.0; },
                 [](const Sample& s) {
                   double worst = 0.0;
                   for (int i = 1; i <= s.n; ++i) {
                     const PartySet one{i};
                     const double a = purity(partial_trace(*s.rho, one));
                     const double b = purity(partial_trace(*s.rho, one.complement(s.n)));
                     worst = std::max(worst, std::abs(a - b));
                   }
                   return worst;
                 }});
    c.push_back({"pure-AB-relation", 3, 3, true, false, kTol, [](int, int) { return 0.0; },
                 [](const Sample& s) {
                   const double d = s.d;
                   const double a = s.decomposition->norm_sq_sum(1);
                   const double b = s.decomposition->norm_sq_sum(2);
                   return std::abs(b / 4.0 - ((0.5 - 1.0 / d) * a + 3.0 / d - 3.0 / (d * d)));
                 }});
    c.push_back({"pure-ABC-relation", 4, 4, true, false, kTol, [](int, int) { return 0.0; },
                 [](const Sample& s) {
                   const double d = s.d;
                   const double a = s.decomposition->norm_sq_sum(1);
                   const double b = s.decomposition->norm_sq_sum(2);
                   const double cc = s.decomposition->norm_sq_sum(3);
                   const double rhs = (2.0 * d * d - 2.0) / std::pow(d, 4) +
                                      (d * d - 3.0) / (4.0 * d * d * d) * a - cc / (16.0 * d);
                   return std::abs(b / (4.0 * d * d) - rhs);
                 }});
    c.push_back({"round-trip", 1, 4, false, true, 1e-10, [](int, int) { return 0.0; },
                 [](const Sample& s) {
                   return (reconstruct_matrix(*s.decomposition) - s.rho->matrix()).norm();
                 }});
    c.push_back({"et-bound", 3, 4, true, false, kTol,
                 [](int d, int n) { return et_upper_bound(d, n); },
                 [](const Sample& s) { return et_measure(*s.rho); }});
    c.push_back({"separable-products", 4, 4, false, false, kTol,
                 [](int d, int) { return separability_thresholds(d).t13; },
                 [](const Sample& s) {
                   const std::uint64_t key = derive_seed(s.seed, fnv1a("separable-products"));
                   const PureState factors[2] = {haar_random_pure(s.d, 1, derive_seed(key, 0)),
                                                 haar_random_pure(s.d, 3, derive_seed(key, 1))};
                   const DensityMatrix rho = from_pure(tensor_product(factors[0], factors[1]));
                   return bloch_tensor(rho, PartySet::all(4)).norm_sq();
                 }});
    for (SeparabilityClass cls : kSeparabilityClasses) {
      std::string_view name;
      switch (cls) {
        case SeparabilityClass::k13: name = "separable-13"; break;
        case SeparabilityClass::k22: name = "separable-22"; break;
        case SeparabilityClass::k112: name = "separable-112"; break;
        case SeparabilityClass::k1111: name = "separable-1111"; break;
      }
      c.push_back({name, 4, 4, false, false, kTol,
                   [cls](int d, int) { return separability_thresholds(d)[cls]; },
                   [cls, name](const Sample& s) { return separable_value(s, cls, name); }});
    }
    return c;
  }();
  return catalog;
}

const CheckDef* find_check(std::string_view name) {
  for (const CheckDef& c : check_catalog()) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

bool applicable(const CheckDef& c, const SampleSpec& spec) {
  if (spec.num_parties < c.min_parties || spec.num_parties > c.max_parties) return false;
  if (c.pure_only && spec.kind != SampleKind::kPureHaar) return false;
  return true;
}

DensityMatrix draw_state(const SampleSpec& spec, std::uint64_t seed) {
  if (spec.kind == SampleKind::kPureHaar) {
    return from_pure(haar_random_pure(spec.local_dim, spec.num_parties, seed));
  }
  return random_mixed(spec.local_dim, spec.num_parties, spec.rank, seed);
}

}  // namespace

std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index) noexcept {
  return splitmix64_mix(base_seed ^ splitmix64_mix(index + 0x632BE59BD9B4E019ull));
}

std::uint64_t CounterRng::next_u64() noexcept {
  ++counter_;
  return splitmix64_mix(key_ + counter_ * kGolden);
}

double CounterRng::uniform() noexcept {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double CounterRng::gaussian() noexcept {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Complex CounterRng::complex_gaussian() noexcept {
  const double re = gaussian();
  const double im = gaussian();
  return Complex(re, im) * std::numbers::sqrt2 * 0.5;
}

std::uint64_t CounterRng::below(std::uint64_t n) noexcept {
  return static_cast<std::uint64_t>(uniform() * static_cast<double>(n)) % n;
}

PureState haar_random_pure(int d, int n, std::uint64_t seed) {
  if (d < 2 || n < 1 || n > kMaxParties) {
    throw Error(ErrorCode::kInvalidDimension, "Haar sampling needs d >= 2 and 1 <= n <= 4");
  }
  CounterRng rng(seed);
  return PureState::normalized(d, n, gaussian_vector(rng, static_cast<Eigen::Index>(ipow(d, n))));
}

DensityMatrix random_mixed(int d, int n, int rank, std::uint64_t seed) {
  if (d < 2 || n < 1 || n > kMaxParties) {
    throw Error(ErrorCode::kInvalidDimension, "Ginibre sampling needs d >= 2 and 1 <= n <= 4");
  }
  const auto dim = static_cast<Eigen::Index>(ipow(d, n));
  if (rank < 1 || rank > dim) {
    throw Error(ErrorCode::kConfiguration, "Ginibre rank must lie in [1, " + std::to_string(dim) + "]");
  }
  CounterRng rng(seed);
  ComplexMatrix g(dim, rank);
  for (Eigen::Index c = 0; c < rank; ++c) g.col(c) = gaussian_vector(rng, dim);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(d, n, std::move(rho));
}

const std::vector<std::vector<PartySet>>& class_partitions(SeparabilityClass c) {
  static const std::vector<std::vector<PartySet>> p13 = {
      {{1}, {2, 3, 4}}, {{2}, {1, 3, 4}}, {{3}, {1, 2, 4}}, {{4}, {1, 2, 3}}};
  static const std::vector<std::vector<PartySet>> p22 = {
      {{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}, {{1, 4}, {2, 3}}};
  static const std::vector<std::vector<PartySet>> p112 = {
      {{1}, {2}, {3, 4}}, {{1}, {3}, {2, 4}}, {{1}, {4}, {2, 3}},
      {{1, 4}, {2}, {3}}, {{1, 3}, {2}, {4}}, {{1, 2}, {3}, {4}}};
  static const std::vector<std::vector<PartySet>> p1111 = {{{1}, {2}, {3}, {4}}};
  switch (c) {
    case SeparabilityClass::k13: return p13;
    case SeparabilityClass::k22: return p22;
    case SeparabilityClass::k112: return p112;
    case SeparabilityClass::k1111: return p1111;
  }
  return p1111;
}

DensityMatrix random_separable(int d, SeparabilityClass c, int members, std::uint64_t seed) {
  if (members < 1) throw Error(ErrorCode::kConfiguration, "need at least one mixture member");
  CounterRng rng(seed);

  std::vector<double> cuts(static_cast<std::size_t>(members - 1));
  for (double& u : cuts) u = rng.uniform();
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> weights(static_cast<std::size_t>(members));
  double prev = 0.0;
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    weights[k] = cuts[k] - prev;
    prev = cuts[k];
  }
  weights.back() = 1.0 - prev;

  const auto& partitions = class_partitions(c);
  std::vector<EnsembleMember> ensemble;
  for (int m = 0; m < members; ++m) {
    const auto& blocks = partitions[rng.below(partitions.size())];
    std::vector<PureState> factors;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const std::uint64_t key = derive_seed(seed, static_cast<std::uint64_t>(m) * 8 + b + 1);
      factors.push_back(haar_random_pure(d, blocks[b].size(), key));
    }
    ensemble.push_back({weights[static_cast<std::size_t>(m)], embed_product(factors, blocks)});
  }
  return from_ensemble(Ensemble(std::move(ensemble)));
}

std::string_view to_string(SampleKind kind) {
  return kind == SampleKind::kPureHaar ? "pure-haar" : "mixed-ginibre";
}

SampleKind parse_sample_kind(std::string_view text) {
  if (text == "pure-haar") return SampleKind::kPureHaar;
  if (text == "mixed-ginibre") return SampleKind::kMixedGinibre;
  throw Error(ErrorCode::kConfiguration, "unknown sample kind '" + std::string(text) + "'");
}

void validate(const SampleSpec& spec) {
  if (spec.local_dim < 2) throw Error(ErrorCode::kConfiguration, "sample spec needs d >= 2");
  if (spec.num_parties < 1 || spec.num_parties > kMaxParties) {
    throw Error(ErrorCode::kConfiguration, "sample spec needs 1 <= parties <= 4");
  }
  if (spec.count < 1) throw Error(ErrorCode::kConfiguration, "sample count must be >= 1");
  const auto dim = ipow(spec.local_dim, spec.num_parties);
  if (spec.rank < 1 || static_cast<std::size_t>(spec.rank) > dim) {
    throw Error(ErrorCode::kConfiguration, "rank must lie in [1, " + std::to_string(dim) + "]");
  }
}

std::vector<std::string> all_check_names() {
  std::vector<std::string> out;
  for (const CheckDef& c : check_catalog()) out.emplace_back(c.name);
  return out;
}

std::vector<std::string> applicable_checks(const SampleSpec& spec) {
  std::vector<std::string> out;
  for (const CheckDef& c : check_catalog()) {
    if (applicable(c, spec)) out.emplace_back(c.name);
  }
  return out;
}

SweepReport run_sweep(const SampleSpec& spec, std::span<const std::string> checks,
                      const SweepOptions& options) {
  validate(spec);
  if (checks.empty()) throw Error(ErrorCode::kConfiguration, "no checks requested");
  if (!(options.tolerance > 0.0)) throw Error(ErrorCode::kConfiguration, "tolerance must be positive");

  std::vector<const CheckDef*> defs;
  for (const std::string& name : checks) {
    const CheckDef* def = find_check(name);
    if (def == nullptr) throw Error(ErrorCode::kConfiguration, "unknown check '" + name + "'");
    if (!applicable(*def, spec)) {
      throw Error(ErrorCode::kConfiguration,
                  "check '" + name + "' does not apply to " + std::to_string(spec.num_parties) +
                      "-party " + std::string(to_string(spec.kind)) + " samples");
    }
    defs.push_back(def);
  }

  const auto count = static_cast<std::size_t>(spec.count);
  // values[check][sample]; each slot written by exactly one worker.
  std::vector<std::vector<double>> values(defs.size(), std::vector<double>(count));

  auto work = [&](std::size_t i) {
    const std::uint64_t seed = derive_seed(spec.base_seed, i);
    const DensityMatrix rho = draw_state(spec, seed);
    const BlochDecomposition dec = full_decomposition(rho);
    const Sample sample{spec.local_dim, spec.num_parties, spec.kind == SampleKind::kPureHaar,
                        seed, &rho, &dec};
    for (std::size_t k = 0; k < defs.size(); ++k) values[k][i] = defs[k]->value(sample);
  };

  unsigned threads = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
  threads = std::clamp<unsigned>(threads, 1u, static_cast<unsigned>(std::min<std::size_t>(count, 64)));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
  } else {
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = t; i < count; i += threads) work(i);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  SweepReport report;
  report.spec = spec;
  for (std::size_t k = 0; k < defs.size(); ++k) {
    const CheckDef& def = *defs[k];
    CheckResult r;
    r.name = std::string(def.name);
    r.samples = spec.count;
    r.bound = def.bound(spec.local_dim, spec.num_parties);
    r.tolerance = def.fixed_tolerance ? def.tolerance : options.tolerance;
    r.max_value = *std::max_element(values[k].begin(), values[k].end());
    r.worst_margin = r.max_value - r.bound;
    r.passed = r.worst_margin <= r.tolerance;
    report.passed = report.passed && r.passed;
    report.checks.push_back(std::move(r));
  }
  return report;
}

}  // namespace blochnorm
