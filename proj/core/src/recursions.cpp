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

#include "patprob/recursions.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

namespace patprob {

namespace {

void require_alphabet(std::uint32_t L) {
  if (L < 2) throw std::invalid_argument("alphabet size must be at least 2");
}

// The recursions below have signed terms; they are accumulated as a positive
// and a negative part so that only the final subtraction can underflow, and
// an underflow there is a bug rather than a rounding artefact.
struct SignedSum {
  ExactProb plus;
  ExactProb minus;

  explicit SignedSum(std::uint32_t L)
      : plus(ExactProb::zero(L)), minus(ExactProb::zero(L)) {}

  ExactProb value() const { return plus - minus; }
};

// Adds sum_{i=1}^{n-1} h_i (1/L^{n-i}) (x[j+i+1] - x[j+i]) for j = k - n,
// where at(m) returns x_m.
template <typename At>
void add_overlap_differences(SignedSum& acc, const BifixIndicator& h,
                             std::size_t k, At&& at) {
  const std::size_t n = h.pattern_length();
  for (std::size_t i = 1; i < n; ++i) {
    if (h.bit(i) == 0) continue;
    const std::size_t idx = k - n + i;
    // - w (x[idx+1] - x[idx]) = w x[idx] - w x[idx+1]
    acc.plus += at(idx).divided_by_base_power(n - i);
    acc.minus += at(idx + 1).divided_by_base_power(n - i);
  }
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::long_recursion:
      return "long-recursion";
    case Method::short_recursion:
      return "short-recursion";
    case Method::p_recursion:
      return "P-recursion";
    case Method::markov:
      return "markov";
    case Method::enumeration:
      return "enumeration";
    case Method::automaton:
      return "automaton";
  }
  return "?";
}

ProbTable ProbTable::from_p(BifixIndicator h, std::uint32_t alphabet_size,
                            Method method, std::vector<ExactProb> p) {
  std::vector<ExactProb> P;
  P.reserve(p.size());
  ExactProb running = ExactProb::zero(alphabet_size);
  for (const auto& value : p) {
    running += value;
    P.push_back(running);
  }
  return ProbTable{std::move(h), alphabet_size, method, std::move(p),
                   std::move(P)};
}

ProbTable ProbTable::from_P(BifixIndicator h, std::uint32_t alphabet_size,
                            Method method, std::vector<ExactProb> P) {
  std::vector<ExactProb> p;
  p.reserve(P.size());
  for (std::size_t k = 0; k < P.size(); ++k) {
    p.push_back(k == 0 ? P[0] : P[k] - P[k - 1]);
  }
  return ProbTable{std::move(h), alphabet_size, method, std::move(p),
                   std::move(P)};
}

bool same_values(const ProbTable& a, const ProbTable& b) {
  return a.p == b.p && a.P == b.P;
}

ProbTable p_table_long(const BifixIndicator& h, std::uint32_t L,
                       std::size_t K) {
  require_alphabet(L);
  const std::size_t n = h.pattern_length();
  const ExactProb hit = ExactProb::unit_fraction(L, n);
  std::vector<ExactProb> p(K + 1, ExactProb::zero(L));
  // Running value of sum_{i=n}^{k-n} p_i.
  ExactProb earlier = ExactProb::zero(L);
  for (std::size_t k = n; k <= K; ++k) {
    if (k >= 2 * n) earlier += p[k - n];
    ExactProb subtract = earlier.divided_by_base_power(n);
    for (std::size_t i = 1; i < n; ++i) {
      if (h.bit(i) == 1) subtract += p[k - n + i].divided_by_base_power(n - i);
    }
    p[k] = hit - subtract;
  }
  return ProbTable::from_p(h, L, Method::long_recursion, std::move(p));
}

ProbTable p_table_short(const BifixIndicator& h, std::uint32_t L,
                        std::size_t K) {
  require_alphabet(L);
  const std::size_t n = h.pattern_length();
  std::vector<ExactProb> p(K + 1, ExactProb::zero(L));
  if (K >= n) p[n] = ExactProb::unit_fraction(L, n);
  for (std::size_t k = n; k + 1 <= K; ++k) {
    SignedSum acc(L);
    acc.plus += p[k];
    acc.minus += p[k + 1 - n].divided_by_base_power(n);
    add_overlap_differences(acc, h, k,
                            [&](std::size_t m) -> const ExactProb& { return p[m]; });
    p[k + 1] = acc.value();
  }
  return ProbTable::from_p(h, L, Method::short_recursion, std::move(p));
}

ProbTable P_table(const BifixIndicator& h, std::uint32_t L, std::size_t K) {
  require_alphabet(L);
  const std::size_t n = h.pattern_length();
  const ExactProb hit = ExactProb::unit_fraction(L, n);
  std::vector<ExactProb> P(K + 1, ExactProb::zero(L));
  if (K >= n) P[n] = hit;
  for (std::size_t k = n; k + 1 <= K; ++k) {
    SignedSum acc(L);
    acc.plus += hit;
    acc.plus += P[k];
    acc.minus += P[k + 1 - n].divided_by_base_power(n);
    add_overlap_differences(acc, h, k,
                            [&](std::size_t m) -> const ExactProb& { return P[m]; });
    P[k + 1] = acc.value();
  }
  return ProbTable::from_P(h, L, Method::p_recursion, std::move(P));
}

namespace {

// Steps the P recursion forward while holding only P_{k-n} ... P_k.
class PWindow {
 public:
  PWindow(const BifixIndicator& h, std::uint32_t L)
      : h_(h), L_(L), hit_(ExactProb::unit_fraction(L, h.pattern_length())) {
    const std::size_t n = h.pattern_length();
    // Window covers indices 0 ... n.
    for (std::size_t k = 0; k < n; ++k) window_.push_back(ExactProb::zero(L));
    window_.push_back(hit_);
    last_ = n;
  }

  std::size_t last_index() const { return last_; }
  const ExactProb& back() const { return window_.back(); }
  const ExactProb& at(std::size_t k) const {
    return window_[k - (last_ + 1 - window_.size())];
  }

  void advance() {
    const std::size_t n = h_.pattern_length();
    const std::size_t k = last_;
    SignedSum acc(L_);
    acc.plus += hit_;
    acc.plus += at(k);
    acc.minus += at(k + 1 - n).divided_by_base_power(n);
    add_overlap_differences(acc, h_, k,
                            [&](std::size_t m) -> const ExactProb& { return at(m); });
    window_.push_back(acc.value());
    window_.pop_front();
    ++last_;
  }

 private:
  const BifixIndicator& h_;
  std::uint32_t L_;
  ExactProb hit_;
  std::deque<ExactProb> window_;
  std::size_t last_ = 0;
};

}  // namespace

ExactProb P_at(const BifixIndicator& h, std::uint32_t L, std::size_t K) {
  require_alphabet(L);
  if (K < h.pattern_length()) return ExactProb::zero(L);
  PWindow window(h, L);
  while (window.last_index() < K) window.advance();
  return window.back();
}

BigInt expected_wait_closed(const BifixIndicator& h, std::uint32_t L) {
  require_alphabet(L);
  const std::size_t n = h.pattern_length();
  BigInt total = power(L, n);
  for (std::size_t i = 1; i < n; ++i) {
    if (h.bit(i) == 1) total += power(L, i);
  }
  return total;
}

SeriesResult expected_wait_series(const BifixIndicator& h, std::uint32_t L,
                                  double tolerance, std::size_t max_index) {
  require_alphabet(L);
  if (!(tolerance > 0)) {
    throw std::invalid_argument("expected_wait_series: tolerance must be > 0");
  }
  constexpr int kStableSteps = 5;
  constexpr double kRatioDrift = 1e-6;

  const std::size_t n = h.pattern_length();
  const ExactProb one = ExactProb::one(L);
  SeriesResult result;
  // Terms k = 0 ... n-1 are exactly 1.
  ExactProb sum = ExactProb::from_parts(
      BigInt(std::min<std::size_t>(n, max_index + 1)), 0, L);
  result.last_index = std::min(n - 1, max_index);
  if (max_index < n) {
    result.value = sum.to_double();
    result.tail_bound = std::numeric_limits<double>::infinity();
    return result;
  }

  PWindow window(h, L);
  double previous_term = 1.0;  // 1 - P_{n-1}
  double previous_ratio = -1.0;
  int stable = 0;
  while (true) {
    const ExactProb tail = one - window.back();
    sum += tail;
    result.last_index = window.last_index();

    const double term = tail.to_double();
    const double ratio = term / previous_term;
    previous_term = term;
    if (ratio < 1.0 && previous_ratio > 0 &&
        std::abs(ratio - previous_ratio) <= kRatioDrift * ratio) {
      ++stable;
    } else {
      stable = 0;
    }
    previous_ratio = ratio;

    if (stable >= kStableSteps) {
      result.tail_bound = term * ratio / (1.0 - ratio);
      if (result.tail_bound < tolerance) {
        result.converged = true;
        break;
      }
    } else {
      result.tail_bound = std::numeric_limits<double>::infinity();
    }
    if (window.last_index() >= max_index) break;
    window.advance();
  }
  result.value = sum.to_rational().convert_to<double>();
  return result;
}

}  // namespace patprob
