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

#include <gtest/gtest.h>

#include "blochnorm/error.hpp"

namespace blochnorm {
namespace {

TEST(PartySetTest, ParsesCommaAndCompactForms) {
  EXPECT_EQ(PartySet::parse("1,2,4"), (PartySet{1, 2, 4}));
  EXPECT_EQ(PartySet::parse("124"), (PartySet{1, 2, 4}));
  EXPECT_EQ(PartySet::parse(" 3 , 1 "), (PartySet{1, 3}));
  EXPECT_EQ((PartySet{4, 2}).to_string(), "2,4");
  EXPECT_EQ((PartySet{4, 2}).label(), "24");
}

TEST(PartySetTest, RejectsBadInput) {
  EXPECT_THROW(PartySet::parse(""), Error);
  EXPECT_THROW(PartySet::parse("1,1"), Error);
  EXPECT_THROW(PartySet::parse("0"), Error);
  EXPECT_THROW(PartySet::parse("5"), Error);
  EXPECT_THROW(PartySet::parse("a"), Error);
  EXPECT_THROW((PartySet{1, 1}), Error);
}

TEST(PartySetTest, ValidityAndComplement) {
  const PartySet s{1, 3};
  EXPECT_TRUE(s.valid_for(3));
  EXPECT_FALSE(s.valid_for(2));
  EXPECT_FALSE(PartySet().valid_for(4));
  EXPECT_EQ(s.complement(4), (PartySet{2, 4}));
  EXPECT_EQ(s.size(), 2);
  EXPECT_EQ(s.max_party(), 3);
}

TEST(PartySetTest, NonemptySubsetsInCanonicalOrder) {
  EXPECT_EQ(nonempty_subsets(1).size(), 1u);
  const auto four = nonempty_subsets(4);
  ASSERT_EQ(four.size(), 15u);
  std::vector<std::string> labels;
  for (PartySet s : four) labels.push_back(s.label());
  const std::vector<std::string> expected = {"1",   "2",   "3",   "4",   "12",  "13",  "14",  "23",
                                             "24",  "34",  "123", "124", "134", "234", "1234"};
  EXPECT_EQ(labels, expected);
}

}  // namespace
}  // namespace blochnorm
