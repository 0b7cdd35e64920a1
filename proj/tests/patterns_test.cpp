// Copyright 2026 The patprob Authors
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

#include "patprob/patterns.hpp"

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "patprob/markov.hpp"
#include "test_support.hpp"

namespace patprob {
namespace {

BifixIndicator H(std::string_view bits) { return BifixIndicator::parse(bits); }

TEST(WordTest, ParseAndPrint) {
  EXPECT_EQ(Word::parse("10011", 2).to_string(), "10011");
  const Word wide = Word::parse("0,1,12,3", 13);
  EXPECT_EQ(wide.size(), 4U);
  EXPECT_EQ(wide[2], 12U);
  EXPECT_EQ(wide.to_string(), "0,1,12,3");
  EXPECT_EQ(Word::parse("0,1,2", 3).to_string(), "012");
}

TEST(WordTest, RejectsBadInput) {
  EXPECT_THROW(Word::parse("102", 2), std::invalid_argument);
  EXPECT_THROW(Word::parse("1a", 2), std::invalid_argument);
  EXPECT_THROW(Word::parse("", 2), std::invalid_argument);
  EXPECT_THROW(Word::parse("1,,0", 2), std::invalid_argument);
  EXPECT_THROW(Word::parse("10", 1), std::invalid_argument);
}

TEST(BifixIndicatorTest, ReferenceExamples) {
  EXPECT_EQ(bifix_indicator(Word::parse("10001", 2)), H("1000"));
  EXPECT_EQ(bifix_indicator(Word::parse("11011", 2)), H("1100"));
  EXPECT_EQ(bifix_indicator(Word::parse("10000", 2)), H("0000"));
  EXPECT_EQ(bifix_indicator(Word::parse("10010", 2)), H("0100"));
}

TEST(BifixIndicatorTest, EdgeCases) {
  EXPECT_EQ(bifix_indicator(Word::parse("0000000", 2)), H("111111"));
  EXPECT_EQ(bifix_indicator(Word::parse("012", 3)), H("00"));
  EXPECT_THROW(bifix_indicator(Word::parse("1", 2)), std::invalid_argument);
  EXPECT_THROW(H(""), std::invalid_argument);
  EXPECT_THROW(H("102"), std::invalid_argument);
}

TEST(BifixIndicatorTest, OneBasedAccess) {
  const BifixIndicator h = H("1100");
  EXPECT_EQ(h.pattern_length(), 5U);
  EXPECT_EQ(h.bit(1), 1);
  EXPECT_EQ(h.bit(3), 0);
  EXPECT_THROW((void)h.bit(5), std::out_of_range);
}

TEST(CompareTest, PartialOrder) {
  EXPECT_EQ(compare(H("0000"), H("1000")), Order::less);
  EXPECT_EQ(compare(H("1000"), H("0000")), Order::greater);
  EXPECT_EQ(compare(H("1000"), H("0100")), Order::incomparable);
  EXPECT_EQ(compare(H("1100"), H("1100")), Order::equal);
  EXPECT_THROW(compare(H("10"), H("100")), std::invalid_argument);
}

TEST(ThresholdTest, StatedFormula) {
  EXPECT_EQ(k0_of_pair(H("0000"), H("1000")), 6U);
  EXPECT_EQ(k0_of_pair(H("0100"), H("1100")), 6U);
  EXPECT_EQ(k0_of_pair(H("00"), H("01")), 5U);
  EXPECT_THROW(k0_of_pair(H("1000"), H("0100")), std::invalid_argument);
  EXPECT_THROW(k0_of_pair(H("1000"), H("0000")), std::invalid_argument);
  EXPECT_THROW(k0_of_pair(H("1000"), H("1000")), std::invalid_argument);
}

TEST(ThresholdTest, ChainThreshold) {
  // A single bifix of length j first matters once two copies overlapping in
  // j symbols fit: 2n - j.
  EXPECT_EQ(chain_threshold(H("0000"), H("1000")), 9U);
  EXPECT_EQ(chain_threshold(H("0100"), H("1100")), 9U);
  EXPECT_EQ(chain_threshold(H("00"), H("01")), 4U);
  EXPECT_EQ(chain_threshold(H("0000"), H("1100")), 8U);
}

TEST(SFromHTest, Examples) {
  EXPECT_EQ(s_from_h(H("0000")), SWord({0, 1, 1, 1, 1}));
  EXPECT_EQ(s_from_h(H("1100")), SWord({0, 1, 1, 0, 0}));
  EXPECT_EQ(s_from_h(H("1")), SWord({0, 0}));
}

TEST(SWordTest, ValidatesTargets) {
  EXPECT_THROW(SWord({1}), std::invalid_argument);
  EXPECT_THROW(SWord({0, 2}), std::invalid_argument);
  EXPECT_THROW(SWord(std::vector<std::uint32_t>{}), std::invalid_argument);
  EXPECT_EQ(SWord::parse("0,1,2"), SWord({0, 1, 2}));
  EXPECT_EQ(SWord::parse("012"), SWord({0, 1, 2}));
  EXPECT_EQ(SWord({0, 1, 2}).to_string(), "0,1,2");
}

TEST(CensusTest, LengthTwoBinary) {
  const Census classes = census(2, 2);
  ASSERT_EQ(classes.size(), 2U);
  const auto& distinct = classes.at(H("0"));
  EXPECT_EQ(distinct.count, 2U);
  EXPECT_EQ(distinct.representatives,
            (std::vector<Word>{Word::parse("01", 2), Word::parse("10", 2)}));
  const auto& repeated = classes.at(H("1"));
  EXPECT_EQ(repeated.representatives,
            (std::vector<Word>{Word::parse("00", 2), Word::parse("11", 2)}));
}

TEST(CensusTest, ExampleWordsLandInTheirClasses) {
  const Census classes = census(5, 2, {.budget = 1U << 10, .max_representatives = 64});
  const std::vector<std::pair<std::string, std::string>> expected = {
      {"10000", "0000"}, {"10001", "1000"}, {"10010", "0100"}, {"11011", "1100"}};
  for (const auto& [word, bits] : expected) {
    const auto& reps = classes.at(H(bits)).representatives;
    EXPECT_NE(std::find(reps.begin(), reps.end(), Word::parse(word, 2)), reps.end())
        << word;
  }
}

TEST(CensusTest, PartitionsAllWords) {
  for (std::uint32_t L : {2U, 3U}) {
    for (std::size_t n = 2; n <= (L == 2 ? 10U : 6U); ++n) {
      const Census classes = census(n, L);
      std::uint64_t total = 0;
      for (const auto& [h, cls] : classes) {
        total += cls.count;
        EXPECT_LE(cls.representatives.size(), 4U);
        EXPECT_GE(cls.representatives.size(), 1U);
        for (const auto& rep : cls.representatives) EXPECT_EQ(bifix_indicator(rep), h);
      }
      EXPECT_EQ(total, checked_word_count(L, n));
      std::vector<std::uint8_t> ones(n - 1, 1);
      EXPECT_TRUE(classes.contains(BifixIndicator(ones)));
    }
  }
}

TEST(CensusTest, BudgetExceeded) {
  try {
    census(12, 2, {.budget = 1000});
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.required(), 4096U);
    EXPECT_EQ(e.budget(), 1000U);
    EXPECT_NE(std::string(e.what()).find("1000"), std::string::npos);
  }
}

TEST(BifixIndicatorProperty, MatchesNaiveScanExhaustivelyBinary) {
  for (std::size_t n = 2; n <= 12; ++n) {
    for (const Word& b : testing::all_words(n, 2)) {
      ASSERT_EQ(bifix_indicator(b).bits().size(), n - 1);
      ASSERT_TRUE(std::ranges::equal(bifix_indicator(b).bits(),
                                     testing::naive_indicator_bits(b)))
          << b.to_string();
    }
  }
}

TEST(BifixIndicatorProperty, MatchesNaiveScanTernarySample) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const Word b = testing::random_word(rng, n, 3);
    ASSERT_TRUE(std::ranges::equal(bifix_indicator(b).bits(),
                                   testing::naive_indicator_bits(b)))
        << b.to_string();
  }
}

TEST(SFromHProperty, SatisfiesJumpConstraint) {
  for (std::size_t n = 2; n <= 9; ++n) {
    for (const auto& [h, cls] : census(n, 2)) {
      const SWord s = s_from_h(h);
      ASSERT_EQ(s.size(), n);
      for (std::size_t i = 0; i < n; ++i) ASSERT_LE(s[i], i);
    }
  }
}

// For strictly ordered classes h < h', the larger s-word is s_from_h(h), and
// the chain threshold n + 1 + min{i - s_i : s_i > s'_i} equals 2n - max{j}.
// The stated indicator threshold n + min{j} agrees with it exactly when
// min{j} + max{j} = n.
TEST(ThresholdProperty, IndicatorAndChainThresholds) {
  for (std::size_t n = 2; n <= 8; ++n) {
    const Census classes = census(n, 2);
    for (const auto& [h, a] : classes) {
      for (const auto& [h2, b] : classes) {
        if (compare(h, h2) != Order::less) continue;
        const SWord s = s_from_h(h);
        const SWord s2 = s_from_h(h2);
        ASSERT_EQ(compare(s, s2), Order::greater);
        ASSERT_EQ(compare(s2, s), Order::less);
        ASSERT_EQ(chain_k0(s, s2), chain_threshold(h, h2));

        std::size_t lo = n;
        std::size_t hi = 0;
        for (std::size_t j = 1; j < n; ++j) {
          if (h.bit(j) == 0 && h2.bit(j) == 1) {
            lo = std::min(lo, j);
            hi = std::max(hi, j);
          }
        }
        ASSERT_EQ(k0_of_pair(h, h2) == chain_threshold(h, h2), lo + hi == n);
      }
    }
  }
}

}  // namespace
}  // namespace patprob
