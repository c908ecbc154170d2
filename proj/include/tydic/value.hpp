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

#include <string>
#include <variant>
#include <vector>

#include "tydic/ast.hpp"
#include "tydic/bigint.hpp"

namespace tydic {

/// Compile-time constant. Arrays hold one of the five basic kinds and never
/// nest.
class Value {
 public:
  struct ClockDomain {
    std::string name;
    bool operator==(const ClockDomain& o) const { return name == o.name; }
  };
  struct Array {
    ValueKind element_kind;
    std::vector<Value> elements;
  };

  Value() : node_(BigInt(0)) {}
  static Value integer(BigInt v) { return Value(std::move(v)); }
  static Value real(double v) { return Value(v); }
  static Value str(std::string v) { return Value(std::move(v)); }
  static Value boolean(bool v) { return Value(v); }
  static Value clock(std::string name) {
    return Value(ClockDomain{std::move(name)});
  }
  static Value array(ValueKind kind, std::vector<Value> elems) {
    return Value(Array{kind, std::move(elems)});
  }

  bool is_int() const { return std::holds_alternative<BigInt>(node_); }
  bool is_float() const { return std::holds_alternative<double>(node_); }
  bool is_string() const { return std::holds_alternative<std::string>(node_); }
  bool is_bool() const { return std::holds_alternative<bool>(node_); }
  bool is_clock() const { return std::holds_alternative<ClockDomain>(node_); }
  bool is_array() const { return std::holds_alternative<Array>(node_); }
  bool is_numeric() const { return is_int() || is_float(); }

  const BigInt& as_int() const { return std::get<BigInt>(node_); }
  double as_float() const { return std::get<double>(node_); }
  const std::string& as_string() const { return std::get<std::string>(node_); }
  bool as_bool() const { return std::get<bool>(node_); }
  const ClockDomain& as_clock() const { return std::get<ClockDomain>(node_); }
  const Array& as_array() const { return std::get<Array>(node_); }

  /// Numeric value as double (int converts); only for numeric values.
  double numeric() const { return is_int() ? as_int().to_double() : as_float(); }

  ValueKind kind() const;
  const char* kind_name() const;

  bool operator==(const Value& other) const;
  bool operator!=(const Value& other) const { return !(*this == other); }

  /// Canonical printable form: ints base-10, floats shortest round-trip,
  /// strings quoted, clock domains bare names. Deterministic; used for
  /// template-identity mangling and diagnostics.
  std::string to_string() const;

  /// Like to_string but safe inside identifiers (strings percent-escaped,
  /// no quotes, '.' of floats kept).
  std::string mangle() const;

 private:
  template <typename T>
  explicit Value(T v) : node_(std::move(v)) {}

  std::variant<BigInt, double, std::string, bool, ClockDomain, Array> node_;
};

const char* value_kind_name(ValueKind kind);

}  // namespace tydic
