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
#include "blochnorm/party_set.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>

#include "blochnorm/error.hpp"

namespace blochnorm {
namespace {

std::uint32_t add_party(std::uint32_t mask, int party) {
  if (party < 1 || party > kMaxParties) {
    throw Error(ErrorCode::kInvalidSubset,
                "party index " + std::to_string(party) + " outside [1, " +
                    std::to_string(kMaxParties) + "]");
  }
  const std::uint32_t bit = 1u << (party - 1);
  if (mask & bit) {
    throw Error(ErrorCode::kInvalidSubset, "party " + std::to_string(party) + " repeated");
  }
  return mask | bit;
}

}  // namespace

PartySet::PartySet(std::initializer_list<int> parties)
    : PartySet(std::span<const int>(parties.begin(), parties.size())) {}

PartySet::PartySet(std::span<const int> parties) {
  for (int p : parties) mask_ = add_party(mask_, p);
}

PartySet PartySet::parse(std::string_view text) {
  std::uint32_t mask = 0;
  const bool has_separator = text.find(',') != std::string_view::npos;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ',' || std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    if (has_separator) {
      while (end < text.size() && text[end] != ',') ++end;
    } else {
      end = pos + 1;
    }
    std::string_view token = text.substr(pos, end - pos);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) {
      token.remove_suffix(1);
    }
    int party = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), party);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::kInvalidSubset, "cannot parse party list '" + std::string(text) + "'");
    }
    mask = add_party(mask, party);
    pos = end;
  }
  if (mask == 0) throw Error(ErrorCode::kInvalidSubset, "empty party list");
  return from_mask(mask);
}

int PartySet::size() const noexcept { return std::popcount(mask_); }

int PartySet::max_party() const noexcept { return 32 - std::countl_zero(mask_); }

std::vector<int> PartySet::parties() const {
  std::vector<int> out;
  for (int p = 1; p <= 32; ++p) {
    if (contains(p)) out.push_back(p);
  }
  return out;
}

std::string PartySet::label() const {
  std::string out;
  for (int p : parties()) out += std::to_string(p);
  return out;
}

std::string PartySet::to_string() const {
  std::string out;
  for (int p : parties()) {
    if (!out.empty()) out += ',';
    out += std::to_string(p);
  }
  return out;
}

std::strong_ordering operator<=>(const PartySet& a, const PartySet& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  const auto pa = a.parties();
  const auto pb = b.parties();
  return std::lexicographical_compare_three_way(pa.begin(), pa.end(), pb.begin(), pb.end());
}

std::vector<PartySet> nonempty_subsets(int n) {
  if (n < 1 || n > kMaxParties) {
    throw Error(ErrorCode::kInvalidDimension, "party count must lie in [1, 4]");
  }
  std::vector<PartySet> out;
  for (std::uint32_t m = 1; m < (1u << n); ++m) out.push_back(PartySet::from_mask(m));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace blochnorm
