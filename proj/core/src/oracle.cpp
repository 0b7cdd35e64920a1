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

#include "patprob/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

namespace patprob {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

struct TrialTally {
  std::vector<std::uint64_t> histogram;
  std::uint64_t censored = 0;
  // Sums of min(wait, k) and its square; exact in 64 bits for k <= 2^20 and
  // up to 2^23 trials per worker.
  std::uint64_t wait_sum = 0;
  std::uint64_t wait_sq_sum = 0;
};

void run_trials(const PatternAutomaton& automaton, const McConfig& cfg,
                std::uint64_t first, std::uint64_t last, TrialTally& tally) {
  const std::uint32_t L = automaton.pattern().alphabet_size();
  const std::size_t accept = automaton.accepting_state();
  std::uniform_int_distribution<Symbol> symbol(0, L - 1);
  for (std::uint64_t t = first; t < last; ++t) {
    std::mt19937_64 rng(splitmix64(cfg.seed + t));
    std::size_t state = 0;
    std::size_t wait = 0;
    for (std::size_t j = 1; j <= cfg.k; ++j) {
      state = automaton.step(state, symbol(rng));
      if (state == accept) {
        wait = j;
        break;
      }
    }
    std::uint64_t censored_wait = cfg.k;
    if (wait == 0) {
      ++tally.censored;
    } else {
      ++tally.histogram[wait];
      censored_wait = wait;
    }
    tally.wait_sum += censored_wait;
    tally.wait_sq_sum += censored_wait * censored_wait;
  }
}

}  // namespace

PatternAutomaton::PatternAutomaton(Word pattern) : pattern_(std::move(pattern)) {
  const std::size_t n = pattern_.size();
  const std::uint32_t L = pattern_.alphabet_size();
  if (n == 0) throw std::invalid_argument("automaton: empty pattern");
  table_.assign((n + 1) * L, 0);

  // Standard failure-function construction: delta(i, c) = i + 1 on a match,
  // otherwise delta(fail(i), c), with fail(0) handled by staying at 0.
  std::size_t fallback = 0;  // state reached by b_2 ... b_i
  for (std::size_t i = 0; i < n; ++i) {
    for (Symbol c = 0; c < L; ++c) {
      if (c == pattern_[i]) {
        table_[i * L + c] = i + 1;
      } else {
        table_[i * L + c] = i == 0 ? 0 : table_[fallback * L + c];
      }
    }
    if (i > 0) fallback = table_[fallback * L + pattern_[i]];
  }
  for (Symbol c = 0; c < L; ++c) table_[n * L + c] = n;
}

ExactProb OccurrenceCounts::P() const {
  return ExactProb::from_parts(contains, k, pattern.alphabet_size());
}

ExactProb OccurrenceCounts::p(std::size_t j) const {
  return ExactProb::from_parts(first_at.at(j), k, pattern.alphabet_size());
}

OccurrenceCounts enum_counts(const Word& pattern, std::size_t k,
                             std::uint64_t budget) {
  const std::uint32_t L = pattern.alphabet_size();
  const std::size_t n = pattern.size();
  const std::uint64_t total = checked_word_count(L, k);
  if (total > budget) throw BudgetExceeded(total, budget);

  const auto b = pattern.symbols();
  std::vector<std::uint64_t> first_at(k + 1, 0);
  std::uint64_t contains = 0;
  std::vector<Symbol> word(k, 0);
  for (std::uint64_t w = 0; w < total; ++w) {
    for (std::size_t end = n; end <= k; ++end) {
      if (std::equal(b.begin(), b.end(), word.begin() + (end - n))) {
        ++first_at[end];
        ++contains;
        break;
      }
    }
    for (std::size_t pos = k; pos-- > 0;) {
      if (++word[pos] < L) break;
      word[pos] = 0;
    }
  }
  OccurrenceCounts counts{pattern, k, BigInt(contains), {}};
  counts.first_at.reserve(k + 1);
  for (auto value : first_at) counts.first_at.emplace_back(value);
  return counts;
}

OccurrenceCounts automaton_counts(const Word& pattern, std::size_t k) {
  const PatternAutomaton automaton(pattern);
  const std::uint32_t L = pattern.alphabet_size();
  const std::size_t n = pattern.size();

  // live[s]: words of the current length that have not yet hit the pattern
  // and end in state s.
  std::vector<BigInt> live(n, 0);
  live[0] = 1;
  // Words of length j whose first occurrence ends exactly at j.
  std::vector<BigInt> hits(k + 1, 0);
  for (std::size_t j = 1; j <= k; ++j) {
    std::vector<BigInt> next(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
      if (live[s] == 0) continue;
      for (Symbol c = 0; c < L; ++c) {
        const std::size_t t = automaton.step(s, c);
        if (t == n) {
          hits[j] += live[s];
        } else {
          next[t] += live[s];
        }
      }
    }
    live = std::move(next);
  }

  OccurrenceCounts counts{pattern, k, 0, std::vector<BigInt>(k + 1, 0)};
  for (std::size_t j = 1; j <= k; ++j) {
    counts.first_at[j] = hits[j] * power(L, k - j);
    counts.contains += counts.first_at[j];
  }
  return counts;
}

ProbTable automaton_prob_table(const Word& pattern, std::size_t K) {
  const OccurrenceCounts counts = automaton_counts(pattern, K);
  const std::uint32_t L = pattern.alphabet_size();
  std::vector<ExactProb> p;
  p.reserve(K + 1);
  for (std::size_t j = 0; j <= K; ++j) {
    // first_at[j] / L^K = hits_j / L^j.
    p.push_back(counts.p(j));
  }
  return ProbTable::from_p(bifix_indicator(pattern), L, Method::automaton,
                           std::move(p));
}

CounterexampleReport counterexample_check() {
  constexpr std::uint32_t L = 2;
  CounterexampleReport report;
  const std::vector<std::string_view> words = {"10000", "10001", "10010",
                                               "11011"};
  const std::vector<std::string_view> expected_bits = {"0000", "1000", "0100",
                                                   "1100"};
  report.indicators_as_expected = true;
  for (std::size_t j = 0; j < words.size(); ++j) {
    report.words.push_back(Word::parse(words[j], L));
    report.indicators.push_back(bifix_indicator(report.words.back()));
    report.P.push_back(automaton_counts(report.words.back(), report.k).P());
    report.indicators_as_expected &=
        report.indicators.back().to_string() == expected_bits[j];
  }

  report.indicator_sums_equal = true;
  for (std::size_t i = 1; i < 5; ++i) {
    report.indicator_sums_equal &=
        report.indicators[0].bit(i) + report.indicators[3].bit(i) ==
        report.indicators[1].bit(i) + report.indicators[2].bit(i);
  }
  report.left_sum = report.P[0] + report.P[3];
  report.right_sum = report.P[1] + report.P[2];
  report.probability_sums_differ = report.left_sum != report.right_sum;
  return report;
}

McResult monte_carlo(const Word& pattern, const McConfig& cfg) {
  if (cfg.trials == 0) throw std::invalid_argument("monte_carlo: trials must be >= 1");
  const PatternAutomaton automaton(pattern);

  unsigned workers = cfg.workers != 0 ? cfg.workers
                                      : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, cfg.trials));
  std::vector<TrialTally> tallies(workers);
  for (auto& tally : tallies) tally.histogram.assign(cfg.k + 1, 0);

  std::vector<std::thread> threads;
  const std::uint64_t chunk = cfg.trials / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t first = w * chunk;
    const std::uint64_t last = w + 1 == workers ? cfg.trials : first + chunk;
    threads.emplace_back(run_trials, std::cref(automaton), std::cref(cfg),
                         first, last, std::ref(tallies[w]));
  }
  for (auto& thread : threads) thread.join();

  McResult result;
  result.seed = cfg.seed;
  result.trials = cfg.trials;
  result.k = cfg.k;
  result.wait_histogram.assign(cfg.k + 1, 0);
  std::uint64_t wait_sum = 0;
  std::uint64_t wait_sq_sum = 0;
  for (const auto& tally : tallies) {
    for (std::size_t j = 0; j <= cfg.k; ++j) {
      result.wait_histogram[j] += tally.histogram[j];
    }
    result.censored += tally.censored;
    wait_sum += tally.wait_sum;
    wait_sq_sum += tally.wait_sq_sum;
  }

  const auto trials = static_cast<double>(cfg.trials);
  std::uint64_t cumulative = 0;
  for (std::size_t j = 0; j <= cfg.k; ++j) {
    cumulative += result.wait_histogram[j];
    const double estimate = static_cast<double>(cumulative) / trials;
    result.P_hat.push_back(estimate);
    result.standard_error.push_back(std::sqrt(estimate * (1 - estimate) / trials));
  }
  result.mean_censored_wait = static_cast<double>(wait_sum) / trials;
  const double second_moment = static_cast<double>(wait_sq_sum) / trials;
  const double variance = std::max(
      0.0, second_moment - result.mean_censored_wait * result.mean_censored_wait);
  result.mean_stderr = std::sqrt(variance / trials);
  return result;
}

}  // namespace patprob
