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


#include "patprob/serialize.hpp"

#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "patprob/oracle.hpp"

namespace patprob {
namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::stringstream in(line);
  for (std::string field; std::getline(in, field, sep);) fields.push_back(field);
  return fields;
}

TEST(SerializeTest, ExactProbShape) {
  const nlohmann::json j = to_json(ExactProb::from_parts(3, 3, 2));
  EXPECT_EQ(j.at("num"), "3");
  EXPECT_EQ(j.at("base"), 2);
  EXPECT_EQ(j.at("den_exp"), 3);
  EXPECT_DOUBLE_EQ(j.at("approx").get<double>(), 0.375);
}

TEST(SerializeTest, LargeNumeratorsAreStrings) {
  const ExactProb big = ExactProb::from_parts(power(3, 90) - 1, 90, 3);
  const nlohmann::json j = to_json(big);
  ASSERT_TRUE(j.at("num").is_string());
  EXPECT_EQ(exact_prob_from_json(j), big);
}

TEST(SerializeTest, RejectsMalformed) {
  EXPECT_THROW(exact_prob_from_json({{"num", "x1"}, {"base", 2}, {"den_exp", 1}}),
               std::invalid_argument);
  EXPECT_THROW(exact_prob_from_json({{"base", 2}, {"den_exp", 1}}), std::invalid_argument);
}

TEST(SerializeProperty, ProbTableRoundTrip) {
  for (std::uint32_t L : {2U, 3U, 5U}) {
    for (std::size_t n = 2; n <= 5; ++n) {
      for (const auto& [h, cls] : census(n, L)) {
        const ProbTable t = P_table(h, L, 3 * n);
        const ProbTable back = prob_table_from_json(to_json(t));
        ASSERT_TRUE(same_values(t, back)) << h.to_string();
        ASSERT_EQ(back.h, h);
        ASSERT_EQ(back.alphabet_size, L);
        ASSERT_EQ(back.method, t.method);
        ASSERT_EQ(to_json(back), to_json(t));
      }
    }
  }
}

TEST(SerializeProperty, CsvAndJsonCarryTheSameNumbers) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint32_t L = 2 + static_cast<std::uint32_t>(rng() % 3);
    std::vector<Symbol> symbols(2 + rng() % 5);
    for (auto& c : symbols) c = static_cast<Symbol>(rng() % L);
    const Word b(symbols, L);
    const ProbTable t = automaton_prob_table(b, 20);
    const nlohmann::json rows = to_json(t).at("rows");

    std::istringstream csv(to_csv(t, 15));
    std::string line;
    std::getline(csv, line);
    ASSERT_EQ(line, "k,p,P,p_exact,P_exact");
    std::size_t k = 0;
    while (std::getline(csv, line)) {
      const auto fields = split(line, ',');
      ASSERT_EQ(fields.size(), 5U) << line;
      const nlohmann::json& row = rows.at(k);
      ASSERT_EQ(std::stoul(fields[0]), row.at("k").get<std::size_t>());
      ASSERT_EQ(fields[3], exact_prob_from_json(row.at("p")).to_string());
      ASSERT_EQ(fields[4], exact_prob_from_json(row.at("P")).to_string());
      ASSERT_NEAR(std::stod(fields[2]), row.at("P").at("approx").get<double>(), 1e-15);
      ++k;
    }
    ASSERT_EQ(k, rows.size());
  }
}

TEST(SerializeTest, OccurrenceCountsListsPositionsOneToK) {
  const nlohmann::json j = to_json(automaton_counts(Word::parse("11", 2), 3));
  EXPECT_EQ(j.at("contains"), "3");
  EXPECT_EQ(j.at("first_at"), nlohmann::json({"0", "2", "1"}));
}

}  // namespace
}  // namespace patprob
