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

// Words over {0, ..., L-1}, their bifix indicators, and jump-target words.
//
// Indexing: bifix indicator bits are exposed 1-based through bit(i), matching
// the usual h_1 ... h_{n-1} notation; storage is 0-based. Text forms always
// list h_1 first.

#ifndef PATPROB_PATTERNS_HPP_
#define PATPROB_PATTERNS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace patprob {

using Symbol = std::uint32_t;

class Word {
 public:
  // Throws std::invalid_argument if alphabet_size < 2 or a symbol is out of
  // range.
  Word(std::vector<Symbol> symbols, std::uint32_t alphabet_size);

  // Digit string ("10011") when L <= 10, comma-separated integers otherwise.
  // Comma-separated input is accepted for any L.
  static Word parse(std::string_view text, std::uint32_t alphabet_size);

  std::span<const Symbol> symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  std::uint32_t alphabet_size() const { return alphabet_size_; }
  Symbol operator[](std::size_t index) const { return symbols_[index]; }

  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Symbol> symbols_;
  std::uint32_t alphabet_size_;
};

// h_i = 1 iff the length-i prefix of the pattern equals its length-i suffix,
// for 1 <= i <= n-1.
class BifixIndicator {
 public:
  // Bits h_1 ... h_{n-1}; each must be 0 or 1 and there must be at least one.
  explicit BifixIndicator(std::vector<std::uint8_t> bits);

  // Binary digit string of length n-1, h_1 first.
  static BifixIndicator parse(std::string_view text);

  std::size_t pattern_length() const { return bits_.size() + 1; }
  // 1-based: bit(1) is h_1.
  int bit(std::size_t i) const { return bits_.at(i - 1); }
  std::span<const std::uint8_t> bits() const { return bits_; }

  std::string to_string() const;

  friend bool operator==(const BifixIndicator&,
                         const BifixIndicator&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// Lexicographic order on indicators, for use as a map key. This is not the
// componentwise partial order used by compare().
struct LexicographicLess {
  bool operator()(const BifixIndicator& a, const BifixIndicator& b) const;
};

// Jump targets (s_0, ..., s_{n-1}) with 0 <= s_i <= i.
class SWord {
 public:
  explicit SWord(std::vector<std::uint32_t> targets);

  // Comma-separated integers ("0,1,1"); a bare digit string is accepted as
  // well when every entry is a single digit.
  static SWord parse(std::string_view text);

  std::size_t size() const { return targets_.size(); }
  std::uint32_t operator[](std::size_t i) const { return targets_[i]; }
  std::span<const std::uint32_t> targets() const { return targets_; }

  std::string to_string() const;

  friend bool operator==(const SWord&, const SWord&) = default;

 private:
  std::vector<std::uint32_t> targets_;
};

enum class Order { equal, less, greater, incomparable };

std::string_view to_string(Order order);

BifixIndicator bifix_indicator(const Word& pattern);

// Componentwise partial order. Throws std::invalid_argument on length
// mismatch.
Order compare(const BifixIndicator& h, const BifixIndicator& h2);
Order compare(const SWord& s, const SWord& s2);

// n + min{ i : h_i = 0 and h'_i = 1 }, the closed-form threshold for
// comparing indicator classes. Requires compare(h, h2) == Order::less.
//
// Note: exact tables show that the probabilities of the two classes first
// separate at chain_threshold(h, h2), which differs from this value unless
// min{i} + max{i} = n over the same index set.
std::size_t k0_of_pair(const BifixIndicator& h, const BifixIndicator& h2);

// 2n - max{ i : h_i = 0 and h'_i = 1 }: the chain comparison threshold for
// s_from_h(h) > s_from_h(h2). Requires compare(h, h2) == Order::less.
std::size_t chain_threshold(const BifixIndicator& h, const BifixIndicator& h2);

// s = (0, 1 - h_{n-1}, 1 - h_{n-2}, ..., 1 - h_1).
SWord s_from_h(const BifixIndicator& h);

struct CensusOptions {
  // Maximum number of words L^n that may be enumerated.
  std::uint64_t budget = std::uint64_t{1} << 24;
  // Representatives kept per class; the count is always exact.
  std::size_t max_representatives = 4;
};

struct CensusClass {
  std::uint64_t count = 0;
  std::vector<Word> representatives;
};

using Census = std::map<BifixIndicator, CensusClass, LexicographicLess>;

// Partitions all L^n words of length n by bifix indicator. Representatives
// are the lexicographically smallest words of each class. Throws
// BudgetExceeded when L^n exceeds options.budget.
Census census(std::size_t n, std::uint32_t alphabet_size,
              const CensusOptions& options = {});

// Raised when an exhaustive enumeration would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget);
  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

// L^length, saturating at UINT64_MAX.
std::uint64_t checked_word_count(std::uint32_t alphabet_size,
                                 std::size_t length);

}  // namespace patprob

#endif  // PATPROB_PATTERNS_HPP_
