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

#include "patprob/markov.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace patprob {

namespace {

Order order_of(const ExactProb& a, const ExactProb& b) {
  const auto cmp = a <=> b;
  if (cmp < 0) return Order::less;
  if (cmp > 0) return Order::greater;
  return Order::equal;
}

std::vector<std::size_t> sample_points(std::size_t K, std::size_t count) {
  std::vector<std::size_t> points;
  if (K + 1 <= count) {
    for (std::size_t k = 0; k <= K; ++k) points.push_back(k);
    return points;
  }
  for (std::size_t j = 0; j < count; ++j) {
    points.push_back(j * K / (count - 1));
  }
  return points;
}

}  // namespace

ChainSpec::ChainSpec(SWord s_in, std::uint32_t L)
    : s(std::move(s_in)), alphabet_size(L) {
  if (alphabet_size < 2) {
    throw std::invalid_argument("chain: alphabet size must be at least 2");
  }
}

ExactMatrix transition_matrix(const ChainSpec& spec) {
  const std::size_t n = spec.levels();
  const std::uint32_t L = spec.alphabet_size;
  const ExactProb zero = ExactProb::zero(L);
  const ExactProb step = ExactProb::unit_fraction(L, 1);
  const ExactProb to_zero = ExactProb::from_parts(L - 2, 1, L);
  const ExactProb stay_zero = ExactProb::from_parts(L - 1, 1, L);

  ExactMatrix matrix(n + 1, std::vector<ExactProb>(n + 1, zero));
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      ExactProb& entry = matrix[i][j];
      if (i == n) {
        entry = j == n ? ExactProb::one(L) : zero;
        continue;
      }
      const std::size_t si = spec.s[i];
      // i + 1 = j and s_i = j cannot both hold because s_i <= i.
      if (j == i + 1) {
        entry = step;
      } else if (j > 0 && si == j) {
        entry = step;
      } else if (j == 0 && si > 0) {
        entry = to_zero;
      } else if (j == 0 && si == 0) {
        entry = stay_zero;
      }
    }
  }
  return matrix;
}

std::vector<ExactProb> forward_absorption(const ChainSpec& spec,
                                          std::size_t K) {
  const std::size_t n = spec.levels();
  const std::uint32_t L = spec.alphabet_size;
  const ExactMatrix matrix = transition_matrix(spec);
  std::vector<ExactProb> dist(n + 1, ExactProb::zero(L));
  dist[0] = ExactProb::one(L);
  std::vector<ExactProb> absorbed;
  absorbed.reserve(K + 1);
  absorbed.push_back(dist[n]);
  for (std::size_t k = 1; k <= K; ++k) {
    std::vector<ExactProb> next(n + 1, ExactProb::zero(L));
    for (std::size_t i = 0; i <= n; ++i) {
      if (dist[i].is_zero()) continue;
      for (std::size_t j = 0; j <= n; ++j) {
        if (!matrix[i][j].is_zero()) next[j] += dist[i] * matrix[i][j];
      }
    }
    dist = std::move(next);
    absorbed.push_back(dist[n]);
  }
  return absorbed;
}

ReachTable reach_table(const ChainSpec& spec, std::size_t K) {
  const std::size_t n = spec.levels();
  const std::uint32_t L = spec.alphabet_size;
  const ExactProb zero = ExactProb::zero(L);
  const ExactProb one = ExactProb::one(L);

  std::vector<std::vector<ExactProb>> rows(K + 1,
                                           std::vector<ExactProb>(n + 1, zero));
  rows[0][n] = one;
  for (std::size_t k = 1; k <= K; ++k) {
    const auto& prev = rows[k - 1];
    auto& cur = rows[k];
    for (std::size_t i = 0; i < n; ++i) {
      ExactProb value = (prev[i + 1] + prev[spec.s[i]]).divided_by_base_power(1);
      if (L > 2) value += prev[0].scaled(L - 2).divided_by_base_power(1);
      cur[i] = std::move(value);
    }
    cur[n] = one;
  }

  const auto forward = forward_absorption(spec, K);
  for (std::size_t k : sample_points(K, 10)) {
    if (forward[k] != rows[k][0]) {
      throw std::logic_error("reach_table: backward P_" + std::to_string(k) +
                             "(0) = " + rows[k][0].to_string() +
                             " disagrees with forward evolution " +
                             forward[k].to_string() + " for s = " +
                             spec.s.to_string());
    }
  }
  return ReachTable(spec, std::move(rows));
}

ProbTable chain_prob_table(const BifixIndicator& h, std::uint32_t L,
                           std::size_t K) {
  const ReachTable table = reach_table(ChainSpec(s_from_h(h), L), K);
  std::vector<ExactProb> P;
  P.reserve(K + 1);
  for (std::size_t k = 0; k <= K; ++k) P.push_back(table.at(k, 0));
  return ProbTable::from_P(h, L, Method::markov, std::move(P));
}

ComparisonReport compare_sequences(const std::vector<ExactProb>& P,
                                   const std::vector<ExactProb>& P2,
                                   std::size_t k0) {
  if (P.size() != P2.size()) {
    throw std::invalid_argument("compare_sequences: length mismatch");
  }
  ComparisonReport report{k0, {}, {}};
  for (std::size_t k = 0; k < P.size(); ++k) {
    const Order relation = order_of(P[k], P2[k]);
    const bool conforms =
        k < k0 ? relation == Order::equal : relation == Order::greater;
    report.per_k.push_back({k, P[k], P2[k], relation, conforms});
    if (!conforms) report.violations.push_back(k);
  }
  return report;
}

std::size_t chain_k0(const SWord& s, const SWord& s2) {
  if (compare(s, s2) != Order::greater) {
    throw std::invalid_argument("s-words " + s.to_string() + " and " +
                                s2.to_string() + " are not strictly ordered s > s'");
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] > s2[i]) best = std::min<std::size_t>(best, i - s[i]);
  }
  return s.size() + 1 + best;
}

ComparisonReport compare_chains(const SWord& s, const SWord& s2,
                                std::uint32_t L, std::size_t K) {
  const std::size_t k0 = chain_k0(s, s2);
  const ReachTable upper = reach_table(ChainSpec(s, L), K);
  const ReachTable lower = reach_table(ChainSpec(s2, L), K);
  std::vector<ExactProb> P;
  std::vector<ExactProb> P2;
  for (std::size_t k = 0; k <= K; ++k) {
    P.push_back(upper.at(k, 0));
    P2.push_back(lower.at(k, 0));
  }
  return compare_sequences(P, P2, k0);
}

std::string_view to_string(Lemma lemma) {
  switch (lemma) {
    case Lemma::monotone_in_k:
      return "monotone-in-k";
    case Lemma::zero_iff:
      return "positive-iff-k+i>=n";
    case Lemma::monotone_in_i:
      return "monotone-in-i";
    case Lemma::absorbing:
      return "absorbing";
  }
  return "?";
}

LemmaReport check_lemmas(const ReachTable& table) {
  const std::size_t n = table.spec().levels();
  const std::size_t K = table.upto();
  LemmaReport report;
  auto fail = [&](Lemma lemma, std::size_t k, std::size_t i, std::string detail) {
    report.violations.push_back({lemma, k, i, std::move(detail)});
  };

  for (std::size_t k = 0; k <= K; ++k) {
    for (std::size_t i = 0; i <= n; ++i) {
      ++report.checked_entries;
      const ExactProb& value = table.at(k, i);
      if (i == n && value != ExactProb::one(value.base())) {
        fail(Lemma::absorbing, k, i, "P_k(n) = " + value.to_string());
      }
      if (k < K && table.at(k + 1, i) < value) {
        fail(Lemma::monotone_in_k, k, i,
             "P_{k+1}(i) = " + table.at(k + 1, i).to_string() + " < " +
                 value.to_string());
      }
      const bool positive = !value.is_zero();
      if (positive != (k + i >= n)) {
        fail(Lemma::zero_iff, k, i, "P_k(i) = " + value.to_string());
      }
      if (i < n) {
        const ExactProb& above = table.at(k, i + 1);
        if (k + i + 1 >= n) {
          if (!(above > value)) {
            fail(Lemma::monotone_in_i, k, i,
                 "expected P_k(i+1) = " + above.to_string() + " > " +
                     value.to_string());
          }
        } else if (!above.is_zero() || !value.is_zero()) {
          fail(Lemma::monotone_in_i, k, i,
               "expected both P_k(i) and P_k(i+1) to be 0");
        }
      }
    }
  }
  return report;
}

LemmaReport check_lemmas(const ChainSpec& spec, std::size_t K) {
  if (K < spec.levels()) {
    throw std::invalid_argument("check_lemmas: K must be at least n");
  }
  return check_lemmas(reach_table(spec, K));
}

}  // namespace patprob
