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

// Jump-target Markov chains X(s).
//
// States are 0 ... n with n = |s| absorbing. From a state i < n the chain
// moves to i+1 with probability 1/L, to s_i with probability 1/L and to 0
// with probability (L-2)/L; when s_i = 0 the last two merge into (L-1)/L.
//
// P_k(i) is the probability of reaching n within k steps from i; P_k(0) is the
// occurrence probability P_k of any pattern whose indicator h has
// s_from_h(h) = s.

#ifndef PATPROB_MARKOV_HPP_
#define PATPROB_MARKOV_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "patprob/numerics.hpp"
#include "patprob/patterns.hpp"
#include "patprob/recursions.hpp"

namespace patprob {

struct ChainSpec {
  SWord s;
  std::uint32_t alphabet_size;

  ChainSpec(SWord s, std::uint32_t alphabet_size);

  // Number of non-absorbing states, which is also the absorbing state's index.
  std::size_t levels() const { return s.size(); }
};

using ExactMatrix = std::vector<std::vector<ExactProb>>;

// (n+1) x (n+1) transition matrix built from the case split on (i, j, s_i).
ExactMatrix transition_matrix(const ChainSpec& spec);

class ReachTable {
 public:
  ReachTable(ChainSpec spec, std::vector<std::vector<ExactProb>> rows)
      : spec_(std::move(spec)), rows_(std::move(rows)) {}

  const ChainSpec& spec() const { return spec_; }
  std::size_t upto() const { return rows_.size() - 1; }
  // P_k(i).
  const ExactProb& at(std::size_t k, std::size_t i) const { return rows_[k][i]; }
  const std::vector<ExactProb>& row(std::size_t k) const { return rows_[k]; }

 private:
  ChainSpec spec_;
  std::vector<std::vector<ExactProb>> rows_;
};

// Fills P_k(i) for 0 <= k <= K by
//   P_k(i) = (1/L) P_{k-1}(i+1) + (1/L) P_{k-1}(s_i) + ((L-2)/L) P_{k-1}(0),
// P_k(n) = 1, P_0(i) = [i == n].
//
// The result is cross-checked against forward evolution of the state
// distribution through transition_matrix() at up to ten evenly spaced k;
// a mismatch throws std::logic_error.
ReachTable reach_table(const ChainSpec& spec, std::size_t K);

// Pr(X_k = n) for k = 0 ... K by forward evolution from X_0 = 0.
std::vector<ExactProb> forward_absorption(const ChainSpec& spec, std::size_t K);

// Occurrence table of the chain X(s_from_h(h)), method markov.
ProbTable chain_prob_table(const BifixIndicator& h, std::uint32_t L,
                           std::size_t K);

struct KVerdict {
  std::size_t k;
  ExactProb P;
  ExactProb P2;
  Order relation;  // of P versus P2, as numbers
  bool conforms;   // equal below k0, P > P2 from k0 on
};

struct ComparisonReport {
  std::size_t k0;
  std::vector<KVerdict> per_k;
  std::vector<std::size_t> violations;  // k values that do not conform

  bool ok() const { return violations.empty(); }
};

// Checks P_k = P2_k for k < k0 and P_k > P2_k for k0 <= k < size.
ComparisonReport compare_sequences(const std::vector<ExactProb>& P,
                                   const std::vector<ExactProb>& P2,
                                   std::size_t k0);

// n + 1 + min{ i - s_i : s_i > s'_i }. Requires compare(s, s2) == greater.
std::size_t chain_k0(const SWord& s, const SWord& s2);

// Builds both reach tables independently and compares P_k(0) against
// chain_k0. Throws std::invalid_argument unless s > s2 strictly.
ComparisonReport compare_chains(const SWord& s, const SWord& s2,
                                std::uint32_t L, std::size_t K);

enum class Lemma {
  monotone_in_k,  // P_{k+1}(i) >= P_k(i)
  zero_iff,       // P_k(i) > 0 iff k + i >= n
  monotone_in_i,  // P_k(i+1) >= P_k(i), strict iff k + i + 1 >= n, else both 0
  absorbing,      // P_k(n) = 1
};

std::string_view to_string(Lemma lemma);

struct LemmaViolation {
  Lemma lemma;
  std::size_t k;
  std::size_t i;
  std::string detail;
};

struct LemmaReport {
  std::size_t checked_entries = 0;
  std::vector<LemmaViolation> violations;

  bool ok() const { return violations.empty(); }
};

LemmaReport check_lemmas(const ReachTable& table);
// Requires K >= n (std::invalid_argument otherwise).
LemmaReport check_lemmas(const ChainSpec& spec, std::size_t K);

}  // namespace patprob

#endif  // PATPROB_MARKOV_HPP_
