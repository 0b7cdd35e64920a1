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

// Exact probabilities of the form num / L^e.
//
// Every probability this library produces is a count of words divided by the
// number L^k of equiprobable words, so the denominator is always a power of
// the alphabet size. Keeping that structure makes equality a field-by-field
// comparison once values are normalized.

#ifndef PATPROB_NUMERICS_HPP_
#define PATPROB_NUMERICS_HPP_

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace patprob {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// L^e as an arbitrary-precision integer.
BigInt power(std::uint32_t base, std::uint64_t exponent);

// A nonnegative rational num / base^den_exp.
//
// Canonical form: num == 0 implies den_exp == 0; otherwise den_exp == 0 or
// num is not divisible by base. All constructors and operators return
// canonical values.
class ExactProb {
 public:
  // Zero in base 2. Mostly useful as a placeholder before assignment.
  ExactProb() = default;

  static ExactProb zero(std::uint32_t base);
  static ExactProb one(std::uint32_t base);
  // 1 / base^exponent.
  static ExactProb unit_fraction(std::uint32_t base, std::uint64_t exponent);
  // num / base^den_exp, normalized. Throws std::invalid_argument if base < 2.
  static ExactProb from_parts(BigInt num, std::uint64_t den_exp,
                              std::uint32_t base);

  const BigInt& num() const { return num_; }
  std::uint64_t den_exp() const { return den_exp_; }
  std::uint32_t base() const { return base_; }
  bool is_zero() const { return num_ == 0; }

  // Operands must share a base (std::invalid_argument otherwise).
  // Subtraction throws std::underflow_error when the result would be negative.
  friend ExactProb operator+(const ExactProb& a, const ExactProb& b);
  friend ExactProb operator-(const ExactProb& a, const ExactProb& b);
  friend ExactProb operator*(const ExactProb& a, const ExactProb& b);
  ExactProb& operator+=(const ExactProb& other);
  ExactProb& operator-=(const ExactProb& other);

  // Multiplication by a nonnegative integer and division by base^exponent.
  ExactProb scaled(std::uint64_t factor) const;
  ExactProb divided_by_base_power(std::uint64_t exponent) const;

  // Value equality is structural equality thanks to the canonical form.
  friend bool operator==(const ExactProb& a, const ExactProb& b) = default;
  // Total order by rational value. Mixing bases throws std::invalid_argument.
  friend std::strong_ordering operator<=>(const ExactProb& a,
                                          const ExactProb& b);

  BigRational to_rational() const;
  // Nearest double, computed from the leading bits of num and den so that it
  // stays finite for very large exponents.
  double to_double() const;

  // Fixed-point rendering with `digits` fractional digits, rounded half to
  // even. Throws std::invalid_argument if digits < 1.
  std::string to_decimal(int digits) const;

  // "num/base^den_exp", or just "num" when den_exp is 0.
  std::string to_string() const;

 private:
  ExactProb(BigInt num, std::uint64_t den_exp, std::uint32_t base)
      : num_(std::move(num)), den_exp_(den_exp), base_(base) {}

  void normalize();

  BigInt num_ = 0;
  std::uint64_t den_exp_ = 0;
  std::uint32_t base_ = 2;
};

std::ostream& operator<<(std::ostream& os, const ExactProb& value);

}  // namespace patprob

#endif  // PATPROB_NUMERICS_HPP_
