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

// Ground truth that does not go through bifix indicators: brute-force
// enumeration of all L^k words, a counting DP over the pattern automaton, and
// a seeded Monte Carlo simulator.

#ifndef PATPROB_ORACLE_HPP_
#define PATPROB_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "patprob/numerics.hpp"
#include "patprob/patterns.hpp"
#include "patprob/recursions.hpp"

namespace patprob {

inline constexpr std::uint64_t kDefaultEnumBudget = std::uint64_t{1} << 24;

// Longest-matched-prefix automaton. State i < n means the last i symbols read
// equal b_1 ... b_i and no longer prefix matches; state n (the pattern has
// been seen) is absorbing.
class PatternAutomaton {
 public:
  explicit PatternAutomaton(Word pattern);

  const Word& pattern() const { return pattern_; }
  std::size_t accepting_state() const { return pattern_.size(); }
  std::size_t step(std::size_t state, Symbol symbol) const {
    return table_[state * pattern_.alphabet_size() + symbol];
  }

 private:
  Word pattern_;
  std::vector<std::size_t> table_;
};

struct OccurrenceCounts {
  Word pattern;
  std::size_t k;
  // Words of length k containing the pattern.
  BigInt contains;
  // first_at[j] for 1 <= j <= k: words whose first occurrence ends at j.
  // first_at[0] is always 0.
  std::vector<BigInt> first_at;

  // contains / L^k, and the matching first-occurrence probability.
  ExactProb P() const;
  ExactProb p(std::size_t j) const;
};

// Exhaustive scan of all L^k words. Throws BudgetExceeded if L^k > budget.
OccurrenceCounts enum_counts(const Word& pattern, std::size_t k,
                             std::uint64_t budget = kDefaultEnumBudget);

// The same counts in O(k n L) big-integer operations via the automaton.
OccurrenceCounts automaton_counts(const Word& pattern, std::size_t k);

// Occurrence table (method automaton) computed from automaton_counts.
ProbTable automaton_prob_table(const Word& pattern, std::size_t K);

// The four length-5 binary words whose indicators satisfy
// h1 + h4 = h2 + h3 componentwise while P_12 is not additive.
struct CounterexampleReport {
  std::size_t k = 12;
  std::vector<Word> words;
  std::vector<BifixIndicator> indicators;
  std::vector<ExactProb> P;
  bool indicators_as_expected = false;
  bool indicator_sums_equal = false;
  ExactProb left_sum;   // P1 + P4
  ExactProb right_sum;  // P2 + P3
  bool probability_sums_differ = false;

  bool reproduced() const {
    return indicators_as_expected && indicator_sums_equal &&
           probability_sums_differ;
  }
};

CounterexampleReport counterexample_check();

inline constexpr std::uint64_t kDefaultSeed = 20240611;
inline constexpr std::string_view kGeneratorName = "mt19937_64/splitmix64-per-trial";

struct McConfig {
  std::uint64_t trials = 100000;
  std::size_t k = 20;
  std::uint64_t seed = kDefaultSeed;
  // Worker threads; 0 picks std::thread::hardware_concurrency(). The result
  // does not depend on this value.
  unsigned workers = 0;
};

struct McResult {
  std::string_view generator = kGeneratorName;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::size_t k = 0;
  // Indexed 0 ... k: fraction of trials with first occurrence ending at or
  // before position j, and its binomial standard error.
  std::vector<double> P_hat;
  std::vector<double> standard_error;
  // wait_histogram[j], 1 <= j <= k: trials whose first occurrence ended at j.
  std::vector<std::uint64_t> wait_histogram;
  std::uint64_t censored = 0;
  // Mean of min(wait, k), and its standard error.
  double mean_censored_wait = 0;
  double mean_stderr = 0;
};

// Simulates cfg.trials independent uniform streams of length cfg.k. Trial t
// draws from mt19937_64 seeded with splitmix64(seed + t), so the output is a
// function of (pattern, trials, k, seed) only.
McResult monte_carlo(const Word& pattern, const McConfig& cfg);

}  // namespace patprob

#endif  // PATPROB_ORACLE_HPP_
