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

// Occurrence probabilities of a pattern in a uniform random word, computed
// from the pattern's bifix indicator alone.
//
//   p_k: the first occurrence ends exactly at position k.
//   P_k: the pattern occurs at least once in a word of length k.
//
// All table entries are exact.

#ifndef PATPROB_RECURSIONS_HPP_
#define PATPROB_RECURSIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "patprob/numerics.hpp"
#include "patprob/patterns.hpp"

namespace patprob {

enum class Method {
  long_recursion,
  short_recursion,
  p_recursion,  // the direct recursion on P_k
  markov,
  enumeration,
  automaton,
};

std::string_view to_string(Method method);

struct ProbTable {
  BifixIndicator h;
  std::uint32_t alphabet_size;
  Method method;
  // Both indexed 0 ... upto().
  std::vector<ExactProb> p;
  std::vector<ExactProb> P;

  std::size_t pattern_length() const { return h.pattern_length(); }
  std::size_t upto() const { return P.size() - 1; }

  // Builds a table from first-occurrence probabilities p_0 ... p_K, filling
  // P by prefix sums.
  static ProbTable from_p(BifixIndicator h, std::uint32_t alphabet_size,
                          Method method, std::vector<ExactProb> p);
  // Builds a table from cumulative probabilities P_0 ... P_K, recovering p
  // as first differences. Throws std::underflow_error if P decreases.
  static ProbTable from_P(BifixIndicator h, std::uint32_t alphabet_size,
                          Method method, std::vector<ExactProb> P);
};

// Entrywise equality of p and P; h, L and method are not compared.
bool same_values(const ProbTable& a, const ProbTable& b);

// p_k = 1/L^n - (1/L^n) sum_{i=n}^{k-n} p_i
//             - sum_{i=1}^{n-1} h_i (1/L^{n-i}) p_{k-n+i}     (k >= n)
// The middle sum is empty for k < 2n.
ProbTable p_table_long(const BifixIndicator& h, std::uint32_t L, std::size_t K);

// The (n+1)-term difference form of the long recursion:
// p_{k+1} = p_k - (1/L^n) p_{k+1-n}
//           - sum_i h_i (1/L^{n-i}) (p_{k-n+i+1} - p_{k-n+i}),  p_n = 1/L^n.
ProbTable p_table_short(const BifixIndicator& h, std::uint32_t L,
                        std::size_t K);

// The same recursion summed once, directly on P:
// P_{k+1} = 1/L^n + P_k - (1/L^n) P_{k+1-n}
//           - sum_i h_i (1/L^{n-i}) (P_{k-n+i+1} - P_{k-n+i}),  P_n = 1/L^n.
ProbTable P_table(const BifixIndicator& h, std::uint32_t L, std::size_t K);

// P_K alone, keeping a sliding window of the last n+1 values.
ExactProb P_at(const BifixIndicator& h, std::uint32_t L, std::size_t K);

// Expected waiting time for the first occurrence: L^n + sum_i h_i L^i.
BigInt expected_wait_closed(const BifixIndicator& h, std::uint32_t L);

struct SeriesResult {
  double value = 0;
  // Estimated remaining tail sum_{k > terms_used} (1 - P_k).
  double tail_bound = 0;
  // The last index K included in the partial sum.
  std::size_t last_index = 0;
  bool converged = false;
};

// sum_{k >= 0} (1 - P_k), accumulated exactly and truncated once a geometric
// tail estimate drops below `tolerance`. The tail model is trusted only after
// five consecutive steps whose ratio (1-P_K)/(1-P_{K-1}) is below 1 and
// changes by less than 1e-6 relative. When max_index is reached first the
// partial sum is returned with converged = false.
SeriesResult expected_wait_series(const BifixIndicator& h, std::uint32_t L,
                                  double tolerance, std::size_t max_index);

}  // namespace patprob

#endif  // PATPROB_RECURSIONS_HPP_
