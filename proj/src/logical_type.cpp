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

#include "tydic/logical_type.hpp"

#include <charconv>

#include "tydic/diagnostic.hpp"

namespace tydic {

std::string TypeIdentity::mangled() const {
  if (display.empty()) return name;
  std::string out = name + "_";
  for (const auto& a : display) out += "_" + a;
  return out;
}

bool LogicalType::is_stream() const {
  return std::holds_alternative<StreamType>(resolved().node);
}

const LogicalType& LogicalType::resolved() const {
  const LogicalType* t = this;
  while (const auto* alias = std::get_if<AliasType>(&t->node))
    t = alias->referent.get();
  return *t;
}

LogicalTypeRef make_type(LogicalType t) {
  return std::make_shared<const LogicalType>(std::move(t));
}

int64_t bit_width(const LogicalType& t) {
  return std::visit(
      [](const auto& node) -> int64_t {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, NullType>) {
          return 0;
        } else if constexpr (std::is_same_v<T, BitType>) {
          if (node.width < 1)
            fail("E011",
                 "bit width must be at least 1, got " +
                     std::to_string(node.width),
                 {});
          return node.width;
        } else if constexpr (std::is_same_v<T, GroupType>) {
          int64_t sum = 0;
          for (const auto& [name, child] : node.fields) {
            int64_t w = bit_width(*child);
            if (__builtin_add_overflow(sum, w, &sum))
              fail("E011", "group width overflows", {});
          }
          return sum;
        } else if constexpr (std::is_same_v<T, UnionType>) {
          int64_t best = 0;
          for (const auto& [name, child] : node.fields)
            best = std::max(best, bit_width(*child));
          return best;
        } else if constexpr (std::is_same_v<T, StreamType>) {
          fail("E011", "a Stream has no scalar bit width", {});
        } else {
          return bit_width(*node.referent);
        }
      },
      t.node);
}

namespace {

bool stream_params_eq(const StreamType& a, const StreamType& b) {
  // Complexity is excluded on purpose: connection compatibility checks it
  // separately with its own rule.
  return a.dimension == b.dimension && a.direction == b.direction &&
         a.throughput == b.throughput && a.synchronicity == b.synchronicity;
}

}  // namespace

bool strict_eq(const LogicalType& a, const LogicalType& b) {
  const auto* alias_a = std::get_if<AliasType>(&a.node);
  const auto* alias_b = std::get_if<AliasType>(&b.node);
  // A named type only ever equals the same name.
  if ((alias_a != nullptr) != (alias_b != nullptr)) return false;
  if (alias_a) return alias_a->id == alias_b->id;

  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& na) -> bool {
        using T = std::decay_t<decltype(na)>;
        const auto& nb = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, NullType>) {
          return true;
        } else if constexpr (std::is_same_v<T, BitType>) {
          return na.width == nb.width;
        } else if constexpr (std::is_same_v<T, GroupType> ||
                             std::is_same_v<T, UnionType>) {
          return na.id == nb.id;
        } else if constexpr (std::is_same_v<T, StreamType>) {
          return stream_params_eq(na, nb) && strict_eq(*na.element, *nb.element);
        } else {
          return false;  // aliases handled above
        }
      },
      a.node);
}

bool hierarchy_eq(const LogicalType& a, const LogicalType& b) {
  const LogicalType& ra = a.resolved();
  const LogicalType& rb = b.resolved();
  if (ra.node.index() != rb.node.index()) return false;
  return std::visit(
      [&](const auto& na) -> bool {
        using T = std::decay_t<decltype(na)>;
        const auto& nb = std::get<T>(rb.node);
        if constexpr (std::is_same_v<T, NullType>) {
          return true;
        } else if constexpr (std::is_same_v<T, BitType>) {
          return na.width == nb.width;
        } else if constexpr (std::is_same_v<T, GroupType> ||
                             std::is_same_v<T, UnionType>) {
          if (na.fields.size() != nb.fields.size()) return false;
          for (size_t i = 0; i < na.fields.size(); ++i) {
            // Field names select hardware signals, so they participate.
            if (na.fields[i].first != nb.fields[i].first) return false;
            if (!hierarchy_eq(*na.fields[i].second, *nb.fields[i].second))
              return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, StreamType>) {
          return stream_params_eq(na, nb) &&
                 hierarchy_eq(*na.element, *nb.element);
        } else {
          return false;  // unreachable, aliases resolved
        }
      },
      ra.node);
}

bool complexity_compatible(const StreamType& source, const StreamType& sink) {
  return source.complexity <= sink.complexity;
}

double parse_shortest_double(const std::string& text) {
  double v = 0;
  std::from_chars(text.data(), text.data() + text.size(), v);
  return v;
}

std::string double_to_string(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, p);
}

namespace {

const char* sync_name(Synchronicity s) {
  switch (s) {
    case Synchronicity::Sync: return "Sync";
    case Synchronicity::Flatten: return "Flatten";
    case Synchronicity::Desync: return "Desync";
    case Synchronicity::FlatDesync: return "FlatDesync";
  }
  return "?";
}

std::string print_type(const LogicalType& t, bool mangle) {
  return std::visit(
      [&](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, NullType>) {
          return "Null";
        } else if constexpr (std::is_same_v<T, BitType>) {
          if (mangle) return "Bit" + std::to_string(node.width);
          return "Bit(" + std::to_string(node.width) + ")";
        } else if constexpr (std::is_same_v<T, GroupType> ||
                             std::is_same_v<T, UnionType>) {
          return node.id.mangled();
        } else if constexpr (std::is_same_v<T, StreamType>) {
          std::string elem = print_type(*node.element, mangle);
          std::string params =
              "d=" + std::to_string(node.dimension) +
              ",r=" + (node.direction == StreamDir::Forward ? "Forward"
                                                            : "Reverse") +
              ",t=" + double_to_string(node.throughput) +
              ",c=" + std::to_string(node.complexity) +
              ",s=" + sync_name(node.synchronicity);
          if (mangle) {
            std::string flat = "Stream_" + elem + "_" + params;
            for (char& c : flat)
              if (c == ',' || c == '=' || c == '.') c = '_';
            return flat;
          }
          return "Stream(" + elem + "," + params + ")";
        } else {
          return node.id.mangled();
        }
      },
      t.node);
}

}  // namespace

std::string type_to_string(const LogicalType& t) { return print_type(t, false); }
std::string type_mangle(const LogicalType& t) { return print_type(t, true); }

std::string type_key(const LogicalType& t) {
  return std::visit(
      [&](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, NullType>) {
          return "null";
        } else if constexpr (std::is_same_v<T, BitType>) {
          return "bit(" + std::to_string(node.width) + ")";
        } else if constexpr (std::is_same_v<T, GroupType> ||
                             std::is_same_v<T, UnionType> ||
                             std::is_same_v<T, AliasType>) {
          std::string out = node.id.file + "#" + node.id.name;
          for (const auto& a : node.id.args) out += "#" + a;
          return out;
        } else if constexpr (std::is_same_v<T, StreamType>) {
          return "stream(" + type_key(*node.element) + "," +
                 std::to_string(node.dimension) + "," +
                 (node.direction == StreamDir::Forward ? "F" : "R") + "," +
                 double_to_string(node.throughput) + "," +
                 std::to_string(node.complexity) + "," +
                 sync_name(node.synchronicity) + ")";
        }
      },
      t.node);
}

}  // namespace tydic
