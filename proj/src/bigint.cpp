// Copyright 2026 the tydic authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tydic/bigint.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace tydic {

namespace {

constexpr uint64_t kBase = 1ull << 32;

int bit_width_u32(uint32_t v) {
  int n = 0;
  while (v != 0) {
    ++n;
    v >>= 1;
  }
  return n;
}

}  // namespace

BigInt::BigInt(int64_t v) {
  if (v == 0) return;
  negative_ = v < 0;
  // Avoid UB on INT64_MIN by widening through unsigned.
  uint64_t mag = negative_ ? ~static_cast<uint64_t>(v) + 1
                           : static_cast<uint64_t>(v);
  limbs_.push_back(static_cast<uint32_t>(mag & 0xffffffffu));
  if (mag >> 32) limbs_.push_back(static_cast<uint32_t>(mag >> 32));
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) negative_ = false;
}

BigInt BigInt::from_string(const std::string& s) {
  size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw std::invalid_argument("empty integer literal");
  BigInt result;
  const BigInt chunk_scale(1000000000);
  size_t pos = i;
  while (pos < s.size()) {
    size_t n = std::min<size_t>(9, s.size() - pos);
    uint32_t chunk = 0;
    for (size_t k = 0; k < n; ++k) {
      char c = s[pos + k];
      if (c < '0' || c > '9')
        throw std::invalid_argument("bad digit in integer literal");
      chunk = chunk * 10 + static_cast<uint32_t>(c - '0');
    }
    BigInt scale(1);
    for (size_t k = 0; k < n; ++k) scale = scale * BigInt(10);
    result = result * scale + BigInt(static_cast<int64_t>(chunk));
    pos += n;
  }
  if (neg && !result.is_zero()) result.negative_ = true;
  return result;
}

size_t BigInt::bit_length() const {
  if (limbs_.empty()) return 0;
  return (limbs_.size() - 1) * 32 +
         static_cast<size_t>(bit_width_u32(limbs_.back()));
}

bool BigInt::fits_int64() const {
  size_t bits = bit_length();
  if (bits < 64) return true;
  if (bits > 64) return false;
  // Exactly 64 bits of magnitude only fits for INT64_MIN.
  if (!negative_) return false;
  return limbs_.size() == 2 && limbs_[0] == 0 && limbs_[1] == 0x80000000u;
}

int64_t BigInt::to_int64() const {
  assert(fits_int64());
  uint64_t mag = 0;
  if (!limbs_.empty()) mag = limbs_[0];
  if (limbs_.size() > 1) mag |= static_cast<uint64_t>(limbs_[1]) << 32;
  if (negative_) return static_cast<int64_t>(~mag + 1);
  return static_cast<int64_t>(mag);
}

double BigInt::to_double() const {
  // strtod gives the correctly rounded nearest double of the decimal form.
  return std::strtod(to_string().c_str(), nullptr);
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  std::vector<uint32_t> mag = limbs_;
  std::string digits;
  while (!mag.empty()) {
    // Divide the magnitude by 10^9, collecting the remainder.
    uint64_t rem = 0;
    for (size_t i = mag.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | mag[i];
      mag[i] = static_cast<uint32_t>(cur / 1000000000ull);
      rem = cur % 1000000000ull;
    }
    while (!mag.empty() && mag.back() == 0) mag.pop_back();
    for (int k = 0; k < 9; ++k) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (negative_) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  if (!r.is_zero()) r.negative_ = !r.negative_;
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  r.negative_ = false;
  return r;
}

int BigInt::compare_magnitude(const std::vector<uint32_t>& a,
                              const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<uint32_t> BigInt::add_magnitude(const std::vector<uint32_t>& a,
                                            const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out;
  out.reserve(std::max(a.size(), b.size()) + 1);
  uint64_t carry = 0;
  for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    uint64_t sum = carry;
    if (i < a.size()) sum += a[i];
    if (i < b.size()) sum += b[i];
    out.push_back(static_cast<uint32_t>(sum & 0xffffffffu));
    carry = sum >> 32;
  }
  if (carry) out.push_back(static_cast<uint32_t>(carry));
  return out;
}

std::vector<uint32_t> BigInt::sub_magnitude(const std::vector<uint32_t>& a,
                                            const std::vector<uint32_t>& b) {
  assert(compare_magnitude(a, b) >= 0);
  std::vector<uint32_t> out;
  out.reserve(a.size());
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t diff = static_cast<int64_t>(a[i]) - borrow;
    if (i < b.size()) diff -= static_cast<int64_t>(b[i]);
    if (diff < 0) {
      diff += static_cast<int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out.push_back(static_cast<uint32_t>(diff));
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

BigInt BigInt::operator+(const BigInt& rhs) const {
  BigInt r;
  if (negative_ == rhs.negative_) {
    r.limbs_ = add_magnitude(limbs_, rhs.limbs_);
    r.negative_ = negative_;
  } else {
    int cmp = compare_magnitude(limbs_, rhs.limbs_);
    if (cmp >= 0) {
      r.limbs_ = sub_magnitude(limbs_, rhs.limbs_);
      r.negative_ = negative_;
    } else {
      r.limbs_ = sub_magnitude(rhs.limbs_, limbs_);
      r.negative_ = rhs.negative_;
    }
  }
  r.trim();
  return r;
}

BigInt BigInt::operator-(const BigInt& rhs) const { return *this + (-rhs); }

BigInt BigInt::operator*(const BigInt& rhs) const {
  if (is_zero() || rhs.is_zero()) return BigInt();
  BigInt r;
  r.limbs_.assign(limbs_.size() + rhs.limbs_.size(), 0);
  for (size_t i = 0; i < limbs_.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < rhs.limbs_.size(); ++j) {
      uint64_t cur = static_cast<uint64_t>(limbs_[i]) * rhs.limbs_[j] +
                     r.limbs_[i + j] + carry;
      r.limbs_[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    size_t k = i + rhs.limbs_.size();
    while (carry) {
      uint64_t cur = r.limbs_[k] + carry;
      r.limbs_[k] = static_cast<uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  r.negative_ = negative_ != rhs.negative_;
  r.trim();
  return r;
}

void BigInt::divmod(const BigInt& lhs, const BigInt& rhs, BigInt& quot,
                    BigInt& rem) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  int cmp = compare_magnitude(lhs.limbs_, rhs.limbs_);
  if (cmp < 0) {
    quot = BigInt();
    rem = lhs;
    return;
  }
  // Binary long division over the magnitude; operands are small enough that
  // the O(bits * limbs) cost never matters for compile-time constants.
  size_t bits = lhs.bit_length();
  BigInt q, r;
  q.limbs_.assign((bits + 31) / 32, 0);
  for (size_t i = bits; i-- > 0;) {
    // r = r*2 + bit(i)
    uint32_t carry = 0;
    for (size_t k = 0; k < r.limbs_.size(); ++k) {
      uint32_t next = r.limbs_[k] >> 31;
      r.limbs_[k] = (r.limbs_[k] << 1) | carry;
      carry = next;
    }
    if (carry) r.limbs_.push_back(carry);
    uint32_t bit = (lhs.limbs_[i / 32] >> (i % 32)) & 1u;
    if (bit) {
      if (r.limbs_.empty()) r.limbs_.push_back(0);
      r.limbs_[0] |= 1u;
    }
    if (compare_magnitude(r.limbs_, rhs.limbs_) >= 0) {
      r.limbs_ = sub_magnitude(r.limbs_, rhs.limbs_);
      q.limbs_[i / 32] |= 1u << (i % 32);
    }
  }
  q.trim();
  r.trim();
  q.negative_ = !q.is_zero() && (lhs.negative_ != rhs.negative_);
  r.negative_ = !r.is_zero() && lhs.negative_;
  quot = q;
  rem = r;
}

BigInt BigInt::operator/(const BigInt& rhs) const {
  BigInt q, r;
  divmod(*this, rhs, q, r);
  return q;
}

BigInt BigInt::operator%(const BigInt& rhs) const {
  BigInt q, r;
  divmod(*this, rhs, q, r);
  return r;
}

BigInt BigInt::pow(uint64_t exp) const {
  BigInt base = *this;
  BigInt result(1);
  while (exp) {
    if (exp & 1) result = result * base;
    exp >>= 1;
    if (exp) base = base * base;
  }
  return result;
}

int BigInt::compare(const BigInt& rhs) const {
  if (negative_ != rhs.negative_) return negative_ ? -1 : 1;
  int mag = compare_magnitude(limbs_, rhs.limbs_);
  return negative_ ? -mag : mag;
}

}  // namespace tydic
