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
#ifndef BLOCHNORM_PARTY_SET_HPP_
#define BLOCHNORM_PARTY_SET_HPP_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace blochnorm {

inline constexpr int kMaxParties = 4;

/// A subset of the parties {1, ..., n}, 1-based. Stored as a bitmask
/// (bit p-1 set iff party p is a member); iteration is ascending.
class PartySet {
 public:
  constexpr PartySet() = default;

  /// Throws Error(kInvalidSubset) on a party outside [1, kMaxParties] or a
  /// repeated party.
  PartySet(std::initializer_list<int> parties);
  explicit PartySet(std::span<const int> parties);

  static constexpr PartySet from_mask(std::uint32_t mask) {
    PartySet s;
    s.mask_ = mask;
    return s;
  }
  static constexpr PartySet all(int n) { return from_mask((1u << n) - 1u); }

  /// Parses "1,2,4" (also accepts "124" for single-digit parties).
  static PartySet parse(std::string_view text);

  constexpr std::uint32_t mask() const noexcept { return mask_; }
  constexpr bool empty() const noexcept { return mask_ == 0; }
  constexpr bool contains(int party) const noexcept {
    return party >= 1 && party <= 32 && ((mask_ >> (party - 1)) & 1u) != 0;
  }
  int size() const noexcept;
  /// Highest member, 0 if empty.
  int max_party() const noexcept;
  std::vector<int> parties() const;

  /// True iff non-empty and every member lies in {1..n}.
  bool valid_for(int n) const noexcept {
    return !empty() && n >= 1 && n <= kMaxParties && (mask_ >> n) == 0;
  }
  PartySet complement(int n) const { return from_mask(all(n).mask_ & ~mask_); }

  /// "124"
  std::string label() const;
  /// "1,2,4"
  std::string to_string() const;

  /// Canonical order: by size, then lexicographic on the sorted member list.
  friend std::strong_ordering operator<=>(const PartySet& a, const PartySet& b);
  friend constexpr bool operator==(PartySet a, PartySet b) { return a.mask_ == b.mask_; }

 private:
  std::uint32_t mask_ = 0;
};

/// All non-empty subsets of {1..n} in canonical order (2^n - 1 of them).
std::vector<PartySet> nonempty_subsets(int n);

}  // namespace blochnorm

#endif  // BLOCHNORM_PARTY_SET_HPP_
