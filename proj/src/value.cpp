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

#include "tydic/value.hpp"

#include "tydic/logical_type.hpp"

namespace tydic {

const char* value_kind_name(ValueKind kind) {
  switch (kind) {
    case ValueKind::Int: return "int";
    case ValueKind::Float: return "float";
    case ValueKind::String: return "string";
    case ValueKind::Bool: return "bool";
    case ValueKind::ClockDomain: return "clockdomain";
  }
  return "?";
}

ValueKind Value::kind() const {
  if (is_int()) return ValueKind::Int;
  if (is_float()) return ValueKind::Float;
  if (is_string()) return ValueKind::String;
  if (is_bool()) return ValueKind::Bool;
  if (is_clock()) return ValueKind::ClockDomain;
  return as_array().element_kind;
}

const char* Value::kind_name() const {
  if (is_array()) return "array";
  return value_kind_name(kind());
}

bool Value::operator==(const Value& other) const {
  if (node_.index() != other.node_.index()) return false;
  return std::visit(
      [&](const auto& a) -> bool {
        using T = std::decay_t<decltype(a)>;
        const auto& b = std::get<T>(other.node_);
        if constexpr (std::is_same_v<T, Array>) {
          if (a.element_kind != b.element_kind) return false;
          if (a.elements.size() != b.elements.size()) return false;
          for (size_t i = 0; i < a.elements.size(); ++i)
            if (a.elements[i] != b.elements[i]) return false;
          return true;
        } else {
          return a == b;
        }
      },
      node_);
}

std::string Value::to_string() const {
  return std::visit(
      [](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, BigInt>) {
          return node.to_string();
        } else if constexpr (std::is_same_v<T, double>) {
          return double_to_string(node);
        } else if constexpr (std::is_same_v<T, std::string>) {
          return "\"" + node + "\"";
        } else if constexpr (std::is_same_v<T, bool>) {
          return node ? "true" : "false";
        } else if constexpr (std::is_same_v<T, ClockDomain>) {
          return node.name;
        } else {
          std::string out = "[";
          for (size_t i = 0; i < node.elements.size(); ++i) {
            if (i) out += ", ";
            out += node.elements[i].to_string();
          }
          return out + "]";
        }
      },
      node_);
}

namespace {

// Percent-escape anything that is not [A-Za-z0-9_]; stable and reversible.
std::string escape_for_ident(const std::string& s) {
  static const char* hex = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : s) {
    if (std::isalnum(c) || c == '_') {
      out.push_back(static_cast<char>(c));
    } else {
      out.push_back('%');
      out.push_back(hex[c >> 4]);
      out.push_back(hex[c & 15]);
    }
  }
  return out;
}

}  // namespace

std::string Value::mangle() const {
  return std::visit(
      [](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, BigInt>) {
          std::string s = node.to_string();
          if (!s.empty() && s[0] == '-') s[0] = 'm';
          return s;
        } else if constexpr (std::is_same_v<T, double>) {
          std::string s = double_to_string(node);
          for (char& c : s) {
            if (c == '.') c = 'p';
            else if (c == '-') c = 'm';
            else if (c == '+') c = '_';
          }
          return s;
        } else if constexpr (std::is_same_v<T, std::string>) {
          return escape_for_ident(node);
        } else if constexpr (std::is_same_v<T, bool>) {
          return node ? "true" : "false";
        } else if constexpr (std::is_same_v<T, ClockDomain>) {
          return escape_for_ident(node.name);
        } else {
          std::string out = "arr";
          for (const auto& v : node.elements) out += "_" + v.mangle();
          return out;
        }
      },
      node_);
}

}  // namespace tydic
