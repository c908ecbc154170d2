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
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tydic/ast.hpp"

namespace tydic {

struct LogicalType;
using LogicalTypeRef = std::shared_ptr<const LogicalType>;

/// Declaration identity: file + declaration name + canonical template
/// argument values. Two identities are equal iff they come from the same
/// declaration with pointwise-equal arguments. `args` holds collision-free
/// canonical strings (the memo key); `display` holds the printable forms
/// that feed the mangled name.
struct TypeIdentity {
  std::string file;
  std::string name;
  std::vector<std::string> args;
  std::vector<std::string> display;

  bool operator==(const TypeIdentity& o) const {
    return file == o.file && name == o.name && args == o.args;
  }
  bool operator!=(const TypeIdentity& o) const { return !(*this == o); }
  bool operator<(const TypeIdentity& o) const {
    if (file != o.file) return file < o.file;
    if (name != o.name) return name < o.name;
    return args < o.args;
  }

  /// `name` or `name__arg1_arg2`; unique up to cross-file name reuse, which
  /// the emitters resolve by suffixing.
  std::string mangled() const;
};

struct NullType {};

struct BitType {
  int64_t width = 1;  // >= 1
};

struct GroupType {
  TypeIdentity id;
  std::vector<std::pair<std::string, LogicalTypeRef>> fields;  // >= 1
};

struct UnionType {
  TypeIdentity id;
  std::vector<std::pair<std::string, LogicalTypeRef>> fields;  // >= 1
};

struct StreamType {
  LogicalTypeRef element;
  int64_t dimension = 0;
  StreamDir direction = StreamDir::Forward;
  double throughput = 1.0;  // > 0
  int64_t complexity = 1;   // >= 1
  Synchronicity synchronicity = Synchronicity::Sync;
};

/// A `type X = ...` alias keeps its nominal identity for strict equality.
struct AliasType {
  TypeIdentity id;
  LogicalTypeRef referent;
};

struct LogicalType {
  std::variant<NullType, BitType, GroupType, UnionType, StreamType, AliasType>
      node;

  bool is_stream() const;
  /// Skips alias indirection; for Stream returns itself.
  const LogicalType& resolved() const;
};

LogicalTypeRef make_type(LogicalType t);

/// Scalar bit width per the logical-type algebra: Null 0, Bit(x) x, Group is
/// the sum of its children, Union the max, aliases follow the referent.
/// Throws CompileError E011 for Streams (streams map to physical signals,
/// not a scalar width) and for Bit widths below 1.
int64_t bit_width(const LogicalType& t);

/// Nominal equality: two named types are equal iff they trace to the same
/// declaration identity; anonymous (structurally written) types compare
/// pointwise, including all Stream parameters except complexity.
bool strict_eq(const LogicalType& a, const LogicalType& b);

/// Structural equality ignoring declaration names: same shape, same widths,
/// same field names and order, same Stream parameters except complexity.
bool hierarchy_eq(const LogicalType& a, const LogicalType& b);

/// A source stream may feed a sink of equal or higher protocol complexity.
bool complexity_compatible(const StreamType& source, const StreamType& sink);

/// Canonical one-line rendering. Named types print as their mangled
/// identity; anonymous types print structurally with all stream parameters.
std::string type_to_string(const LogicalType& t);

/// Identifier-safe variant of type_to_string (used in template mangles).
std::string type_mangle(const LogicalType& t);

/// Fully canonical, collision-free rendering (named nodes keep their file);
/// feeds template-identity keys, never output.
std::string type_key(const LogicalType& t);

double parse_shortest_double(const std::string& text);
std::string double_to_string(double v);

}  // namespace tydic
