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

#include "patprob/numerics.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace patprob {

namespace {

void require_same_base(const ExactProb& a, const ExactProb& b) {
  if (a.base() != b.base()) {
    throw std::invalid_argument("ExactProb: mismatched bases " +
                                std::to_string(a.base()) + " and " +
                                std::to_string(b.base()));
  }
}

// Numerators of a and b brought to the common exponent max(ea, eb).
std::pair<BigInt, BigInt> aligned(const ExactProb& a, const ExactProb& b) {
  if (a.den_exp() == b.den_exp()) return {a.num(), b.num()};
  if (a.den_exp() < b.den_exp()) {
    return {a.num() * power(a.base(), b.den_exp() - a.den_exp()), b.num()};
  }
  return {a.num(), b.num() * power(a.base(), a.den_exp() - b.den_exp())};
}

}  // namespace

BigInt power(std::uint32_t base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt factor = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= factor;
    exponent >>= 1U;
    if (exponent != 0) factor *= factor;
  }
  return result;
}

ExactProb ExactProb::zero(std::uint32_t base) { return from_parts(0, 0, base); }

ExactProb ExactProb::one(std::uint32_t base) { return from_parts(1, 0, base); }

ExactProb ExactProb::unit_fraction(std::uint32_t base, std::uint64_t exponent) {
  return from_parts(1, exponent, base);
}

ExactProb ExactProb::from_parts(BigInt num, std::uint64_t den_exp,
                                std::uint32_t base) {
  if (base < 2) {
    throw std::invalid_argument("ExactProb: base must be at least 2");
  }
  if (num < 0) {
    throw std::invalid_argument("ExactProb: numerator must be nonnegative");
  }
  ExactProb value(std::move(num), den_exp, base);
  value.normalize();
  return value;
}

void ExactProb::normalize() {
  if (num_ == 0) {
    den_exp_ = 0;
    return;
  }
  BigInt quotient;
  BigInt remainder;
  while (den_exp_ > 0) {
    divide_qr(num_, BigInt(base_), quotient, remainder);
    if (remainder != 0) break;
    num_ = std::move(quotient);
    --den_exp_;
  }
}

ExactProb operator+(const ExactProb& a, const ExactProb& b) {
  require_same_base(a, b);
  auto [x, y] = aligned(a, b);
  return ExactProb::from_parts(x + y, std::max(a.den_exp(), b.den_exp()),
                               a.base());
}

ExactProb operator-(const ExactProb& a, const ExactProb& b) {
  require_same_base(a, b);
  auto [x, y] = aligned(a, b);
  if (x < y) {
    throw std::underflow_error("ExactProb: subtraction " + a.to_string() +
                               " - " + b.to_string() + " is negative");
  }
  return ExactProb::from_parts(x - y, std::max(a.den_exp(), b.den_exp()),
                               a.base());
}

ExactProb operator*(const ExactProb& a, const ExactProb& b) {
  require_same_base(a, b);
  return ExactProb::from_parts(a.num() * b.num(), a.den_exp() + b.den_exp(),
                               a.base());
}

ExactProb& ExactProb::operator+=(const ExactProb& other) {
  *this = *this + other;
  return *this;
}

ExactProb& ExactProb::operator-=(const ExactProb& other) {
  *this = *this - other;
  return *this;
}

ExactProb ExactProb::scaled(std::uint64_t factor) const {
  return from_parts(num_ * factor, den_exp_, base_);
}

ExactProb ExactProb::divided_by_base_power(std::uint64_t exponent) const {
  return from_parts(num_, den_exp_ + exponent, base_);
}

std::strong_ordering operator<=>(const ExactProb& a, const ExactProb& b) {
  require_same_base(a, b);
  auto [x, y] = aligned(a, b);
  if (x < y) return std::strong_ordering::less;
  if (x > y) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BigRational ExactProb::to_rational() const {
  return BigRational(num_, power(base_, den_exp_));
}

double ExactProb::to_double() const {
  if (num_ == 0) return 0.0;
  // Integer quotient with at least 64 significant bits; a nonzero remainder
  // becomes a sticky low bit so the final conversion rounds correctly.
  const BigInt den = power(base_, den_exp_);
  const long gap = static_cast<long>(boost::multiprecision::msb(num_)) -
                   static_cast<long>(boost::multiprecision::msb(den));
  const long shift = 65 - gap;
  BigInt quotient;
  BigInt remainder;
  if (shift > 0) {
    divide_qr(BigInt(num_ << shift), den, quotient, remainder);
  } else {
    divide_qr(num_, BigInt(den << -shift), quotient, remainder);
  }
  if (remainder != 0) quotient |= 1;
  // Round to 53 bits, ties to even.
  const long drop = static_cast<long>(boost::multiprecision::msb(quotient)) - 52;
  BigInt mantissa = quotient >> drop;
  const BigInt rest = quotient - (mantissa << drop);
  const BigInt half = BigInt(1) << (drop - 1);
  if (rest > half || (rest == half && (mantissa & 1) != 0)) mantissa += 1;
  return std::ldexp(static_cast<double>(mantissa.convert_to<std::uint64_t>()),
                    static_cast<int>(drop - shift));
}

std::string ExactProb::to_decimal(int digits) const {
  if (digits < 1) {
    throw std::invalid_argument("ExactProb::to_decimal: digits must be >= 1");
  }
  const BigInt den = power(base_, den_exp_);
  const BigInt scaled_num = num_ * power(10, static_cast<std::uint64_t>(digits));
  BigInt quotient;
  BigInt remainder;
  divide_qr(scaled_num, den, quotient, remainder);
  const BigInt twice = remainder * 2;
  if (twice > den || (twice == den && (quotient & 1) != 0)) {
    quotient += 1;
  }
  std::string text = quotient.str();
  if (text.size() <= static_cast<std::size_t>(digits)) {
    text.insert(0, static_cast<std::size_t>(digits) + 1 - text.size(), '0');
  }
  text.insert(text.size() - static_cast<std::size_t>(digits), ".");
  return text;
}

std::string ExactProb::to_string() const {
  if (den_exp_ == 0) return num_.str();
  return num_.str() + "/" + std::to_string(base_) + "^" +
         std::to_string(den_exp_);
}

std::ostream& operator<<(std::ostream& os, const ExactProb& value) {
  return os << value.to_string();
}

}  // namespace patprob
