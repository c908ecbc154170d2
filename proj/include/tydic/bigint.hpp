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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tydic {

/// Arbitrary-precision signed integer, sign-magnitude with base 2^32 limbs
/// (little endian). Sized for compile-time constant math: operands stay in
/// the hundreds of bits, so schoolbook algorithms are plenty.
class BigInt {
 public:
  BigInt() = default;
  BigInt(int64_t v);  // NOLINT(google-explicit-constructor)

  /// Parses a decimal string with optional leading '-'. Throws
  /// std::invalid_argument on anything else.
  static BigInt from_string(const std::string& s);

  bool is_zero() const { return limbs_.empty(); }
  bool is_negative() const { return negative_; }

  /// Number of bits in the magnitude; 0 for zero.
  size_t bit_length() const;

  /// True iff the value fits in int64_t.
  bool fits_int64() const;
  int64_t to_int64() const;  // asserts fits_int64()

  /// Correctly rounded conversion (via decimal round trip); overflows to
  /// +/-inf like any double conversion would.
  double to_double() const;

  std::string to_string() const;

  BigInt operator-() const;
  BigInt abs() const;

  BigInt operator+(const BigInt& rhs) const;
  BigInt operator-(const BigInt& rhs) const;
  BigInt operator*(const BigInt& rhs) const;

  /// Truncating division; remainder takes the dividend's sign.
  /// Throws std::domain_error when rhs is zero.
  static void divmod(const BigInt& lhs, const BigInt& rhs, BigInt& quot,
                     BigInt& rem);
  BigInt operator/(const BigInt& rhs) const;
  BigInt operator%(const BigInt& rhs) const;

  /// this^exp with exp >= 0.
  BigInt pow(uint64_t exp) const;

  int compare(const BigInt& rhs) const;  // -1, 0, +1
  bool operator==(const BigInt& rhs) const { return compare(rhs) == 0; }
  bool operator!=(const BigInt& rhs) const { return compare(rhs) != 0; }
  bool operator<(const BigInt& rhs) const { return compare(rhs) < 0; }
  bool operator<=(const BigInt& rhs) const { return compare(rhs) <= 0; }
  bool operator>(const BigInt& rhs) const { return compare(rhs) > 0; }
  bool operator>=(const BigInt& rhs) const { return compare(rhs) >= 0; }

 private:
  static int compare_magnitude(const std::vector<uint32_t>& a,
                               const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_magnitude(const std::vector<uint32_t>& a,
                                             const std::vector<uint32_t>& b);
  // Requires |a| >= |b|.
  static std::vector<uint32_t> sub_magnitude(const std::vector<uint32_t>& a,
                                             const std::vector<uint32_t>& b);
  void trim();

  bool negative_ = false;
  std::vector<uint32_t> limbs_;  // empty == zero
};

}  // namespace tydic
