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

// Test-only helpers: naive reference implementations and small generators.
// Nothing here may call into the code paths it is used to check.

#ifndef PATPROB_TESTS_TEST_SUPPORT_HPP_
#define PATPROB_TESTS_TEST_SUPPORT_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "patprob/patterns.hpp"

namespace patprob::testing {

// All words of the given length, in base-L counting order.
inline std::vector<Word> all_words(std::size_t length, std::uint32_t L) {
  std::vector<Word> words;
  std::vector<Symbol> digits(length, 0);
  while (true) {
    words.emplace_back(digits, L);
    std::size_t pos = length;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < L) break;
      digits[pos] = 0;
      if (pos == 0) return words;
    }
    if (length == 0) return words;
  }
}

inline Word random_word(std::mt19937_64& rng, std::size_t length,
                        std::uint32_t L) {
  std::uniform_int_distribution<Symbol> symbol(0, L - 1);
  std::vector<Symbol> digits(length);
  for (auto& d : digits) d = symbol(rng);
  return Word(digits, L);
}

// Prefix/suffix comparison by a plain double loop.
inline std::vector<std::uint8_t> naive_indicator_bits(const Word& b) {
  const std::size_t n = b.size();
  std::vector<std::uint8_t> bits(n - 1, 0);
  for (std::size_t i = 1; i < n; ++i) {
    bool equal = true;
    for (std::size_t j = 0; j < i; ++j) {
      if (b[j] != b[n - i + j]) {
        equal = false;
        break;
      }
    }
    bits[i - 1] = equal ? 1 : 0;
  }
  return bits;
}

// Every SWord of length n (there are n! of them).
inline std::vector<SWord> all_swords(std::size_t n) {
  std::vector<SWord> out;
  std::vector<std::uint32_t> s(n, 0);
  while (true) {
    out.emplace_back(s);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (s[i] < i) {
        ++s[i];
        break;
      }
      s[i] = 0;
      if (i == 0) return out;
    }
  }
}

inline SWord random_sword(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint32_t> s(n);
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = std::uniform_int_distribution<std::uint32_t>(
        0, static_cast<std::uint32_t>(i))(rng);
  }
  return SWord(s);
}

// A random pair with s > s2 strictly: s2 is s with at least one coordinate
// lowered.
inline std::pair<SWord, SWord> random_strict_pair(std::mt19937_64& rng,
                                                  std::size_t n) {
  while (true) {
    const SWord s = random_sword(rng, n);
    std::vector<std::uint32_t> lower(s.targets().begin(), s.targets().end());
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (lower[i] == 0) continue;
      if (std::bernoulli_distribution(0.5)(rng)) {
        lower[i] = std::uniform_int_distribution<std::uint32_t>(0, lower[i] - 1)(rng);
        changed = true;
      }
    }
    if (changed) return {s, SWord(lower)};
  }
}

}  // namespace patprob::testing

#endif  // PATPROB_TESTS_TEST_SUPPORT_HPP_
