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
#include <charconv>
#include <limits>

namespace patprob {

namespace {

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    parts.push_back(text.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

std::uint32_t parse_unsigned(std::string_view text, std::string_view what) {
  std::uint32_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw std::invalid_argument(std::string(what) + ": cannot parse '" +
                                std::string(text) + "' as an integer");
  }
  return value;
}

// Parses "0,1,2" or, without commas, one digit per entry.
std::vector<std::uint32_t> parse_sequence(std::string_view text,
                                          std::string_view what) {
  if (text.empty()) {
    throw std::invalid_argument(std::string(what) + ": empty input");
  }
  std::vector<std::uint32_t> values;
  if (text.find(',') != std::string_view::npos) {
    for (auto part : split_commas(text)) {
      values.push_back(parse_unsigned(part, what));
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument(std::string(what) + ": unexpected '" +
                                    std::string(1, c) + "' in '" +
                                    std::string(text) + "'");
      }
      values.push_back(static_cast<std::uint32_t>(c - '0'));
    }
  }
  return values;
}

std::string join(std::span<const std::uint32_t> values, bool commas) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (commas && i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

// Indices i (1-based) with h_i = 0 and h'_i = 1.
std::vector<std::size_t> separating_indices(const BifixIndicator& h,
                                            const BifixIndicator& h2) {
  if (compare(h, h2) != Order::less) {
    throw std::invalid_argument("indicator pair " + h.to_string() + ", " +
                                h2.to_string() + " is not strictly ordered");
  }
  std::vector<std::size_t> indices;
  for (std::size_t i = 1; i < h.pattern_length(); ++i) {
    if (h.bit(i) == 0 && h2.bit(i) == 1) indices.push_back(i);
  }
  return indices;
}

template <typename Seq>
Order componentwise(const Seq& a, const Seq& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("compare: length mismatch (" +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + ")");
  }
  bool some_less = false;
  bool some_greater = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    some_less |= a[i] < b[i];
    some_greater |= a[i] > b[i];
  }
  if (some_less && some_greater) return Order::incomparable;
  if (some_less) return Order::less;
  if (some_greater) return Order::greater;
  return Order::equal;
}

}  // namespace

Word::Word(std::vector<Symbol> symbols, std::uint32_t alphabet_size)
    : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
  if (alphabet_size_ < 2) {
    throw std::invalid_argument("alphabet size must be at least 2");
  }
  for (Symbol c : symbols_) {
    if (c >= alphabet_size_) {
      throw std::invalid_argument("symbol " + std::to_string(c) +
                                  " out of range for alphabet size " +
                                  std::to_string(alphabet_size_));
    }
  }
}

Word Word::parse(std::string_view text, std::uint32_t alphabet_size) {
  return Word(parse_sequence(text, "word"), alphabet_size);
}

std::string Word::to_string() const {
  return join(symbols_, alphabet_size_ > 10);
}

BifixIndicator::BifixIndicator(std::vector<std::uint8_t> bits)
    : bits_(std::move(bits)) {
  if (bits_.empty()) {
    throw std::invalid_argument(
        "bifix indicator needs at least one bit (pattern length >= 2)");
  }
  for (auto bit : bits_) {
    if (bit > 1) throw std::invalid_argument("bifix indicator bits must be 0/1");
  }
}

BifixIndicator BifixIndicator::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bifix indicator: expected binary digits, got '" +
                                  std::string(text) + "'");
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return BifixIndicator(std::move(bits));
}

std::string BifixIndicator::to_string() const {
  std::string out;
  for (auto bit : bits_) out += static_cast<char>('0' + bit);
  return out;
}

bool LexicographicLess::operator()(const BifixIndicator& a,
                                   const BifixIndicator& b) const {
  return std::ranges::lexicographical_compare(a.bits(), b.bits());
}

SWord::SWord(std::vector<std::uint32_t> targets) : targets_(std::move(targets)) {
  if (targets_.empty()) throw std::invalid_argument("s-word must be nonempty");
  for (std::size_t i = 0; i < targets_.size(); ++i) {
    if (targets_[i] > i) {
      throw std::invalid_argument("s-word entry s_" + std::to_string(i) + " = " +
                                  std::to_string(targets_[i]) +
                                  " violates 0 <= s_i <= i");
    }
  }
}

SWord SWord::parse(std::string_view text) {
  return SWord(parse_sequence(text, "s-word"));
}

std::string SWord::to_string() const { return join(targets_, true); }

std::string_view to_string(Order order) {
  switch (order) {
    case Order::equal:
      return "equal";
    case Order::less:
      return "less";
    case Order::greater:
      return "greater";
    case Order::incomparable:
      return "incomparable";
  }
  return "?";
}

BifixIndicator bifix_indicator(const Word& pattern) {
  const std::size_t n = pattern.size();
  if (n < 2) {
    throw std::invalid_argument("bifix indicator needs a word of length >= 2");
  }
  const auto symbols = pattern.symbols();
  std::vector<std::uint8_t> bits(n - 1, 0);
  // Border lengths come from the failure function: the borders of b are the
  // chain fail[n-1], fail[fail[n-1]-1], ...
  std::vector<std::size_t> fail(n, 0);
  for (std::size_t i = 1, len = 0; i < n;) {
    if (symbols[i] == symbols[len]) {
      fail[i++] = ++len;
    } else if (len != 0) {
      len = fail[len - 1];
    } else {
      fail[i++] = 0;
    }
  }
  for (std::size_t len = fail[n - 1]; len > 0; len = fail[len - 1]) {
    bits[len - 1] = 1;
  }
  return BifixIndicator(std::move(bits));
}

Order compare(const BifixIndicator& h, const BifixIndicator& h2) {
  return componentwise(h.bits(), h2.bits());
}

Order compare(const SWord& s, const SWord& s2) {
  return componentwise(s.targets(), s2.targets());
}

std::size_t k0_of_pair(const BifixIndicator& h, const BifixIndicator& h2) {
  const auto indices = separating_indices(h, h2);
  return h.pattern_length() + indices.front();
}

std::size_t chain_threshold(const BifixIndicator& h, const BifixIndicator& h2) {
  const auto indices = separating_indices(h, h2);
  return 2 * h.pattern_length() - indices.back();
}

SWord s_from_h(const BifixIndicator& h) {
  const std::size_t n = h.pattern_length();
  std::vector<std::uint32_t> s(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    s[i] = static_cast<std::uint32_t>(1 - h.bit(n - i));
  }
  return SWord(std::move(s));
}

BudgetExceeded::BudgetExceeded(std::uint64_t required, std::uint64_t budget)
    : std::runtime_error("enumeration of " +
                         (required == std::numeric_limits<std::uint64_t>::max()
                              ? std::string("more than 2^64")
                              : std::to_string(required)) +
                         " words exceeds the enumeration budget of " +
                         std::to_string(budget) +
                         " (set PATPROB_ENUM_BUDGET to raise it)"),
      required_(required),
      budget_(budget) {}

std::uint64_t checked_word_count(std::uint32_t alphabet_size,
                                 std::size_t length) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < length; ++i) {
    if (count > kMax / alphabet_size) return kMax;
    count *= alphabet_size;
  }
  return count;
}

Census census(std::size_t n, std::uint32_t alphabet_size,
              const CensusOptions& options) {
  if (n < 2) throw std::invalid_argument("census: n must be at least 2");
  if (alphabet_size < 2) throw std::invalid_argument("census: L must be >= 2");
  const std::uint64_t total = checked_word_count(alphabet_size, n);
  if (total > options.budget) throw BudgetExceeded(total, options.budget);

  Census classes;
  std::vector<Symbol> digits(n, 0);
  for (std::uint64_t w = 0; w < total; ++w) {
    Word word(digits, alphabet_size);
    auto& cls = classes[bifix_indicator(word)];
    ++cls.count;
    if (cls.representatives.size() < options.max_representatives) {
      cls.representatives.push_back(std::move(word));
    }
    // Base-L counter, most significant symbol first.
    for (std::size_t pos = n; pos-- > 0;) {
      if (++digits[pos] < alphabet_size) break;
      digits[pos] = 0;
    }
  }
  return classes;
}

}  // namespace patprob
