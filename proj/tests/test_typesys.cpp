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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/type_gen.hpp"
#include "tydic/logical_type.hpp"

using namespace tydic;
using tydic::testing::oracle_width;
using tydic::testing::random_type_tree;

namespace {

LogicalTypeRef bit(int64_t w) { return make_type(LogicalType{BitType{w}}); }

LogicalTypeRef group(const std::string& name,
                     std::vector<std::pair<std::string, LogicalTypeRef>> fs) {
  return make_type(
      LogicalType{GroupType{TypeIdentity{"f", name, {}, {}}, std::move(fs)}});
}

LogicalTypeRef uni(const std::string& name,
                   std::vector<std::pair<std::string, LogicalTypeRef>> fs) {
  return make_type(
      LogicalType{UnionType{TypeIdentity{"f", name, {}, {}}, std::move(fs)}});
}

LogicalTypeRef alias(const std::string& name, LogicalTypeRef t) {
  return make_type(
      LogicalType{AliasType{TypeIdentity{"f", name, {}, {}}, std::move(t)}});
}

LogicalTypeRef stream(LogicalTypeRef elem, int64_t d = 0, int64_t c = 1,
                      double t = 1.0, StreamDir r = StreamDir::Forward) {
  StreamType s;
  s.element = std::move(elem);
  s.dimension = d;
  s.complexity = c;
  s.throughput = t;
  s.direction = r;
  return make_type(LogicalType{std::move(s)});
}

}  // namespace

TEST_CASE("bit widths from the type algebra") {
  CHECK(bit_width(*bit(8)) == 8);  // an ASCII character
  CHECK(bit_width(LogicalType{NullType{}}) == 0);
  // Group: sum of all child element bit widths.
  CHECK(bit_width(*group("g", {{"a", bit(8)}, {"b", bit(32)}})) == 40);
  // Union: maximum bit width of a single child.
  CHECK(bit_width(*uni("u", {{"a", bit(8)}, {"b", bit(32)}})) == 32);
  // Aliases are transparent for widths.
  CHECK(bit_width(*alias("x", group("g", {{"a", bit(3)}}))) == 3);
}

TEST_CASE("bit width errors") {
  CHECK_THROWS_AS((void)bit_width(*bit(0)), CompileError);
  CHECK_THROWS_AS((void)bit_width(*stream(bit(8))), CompileError);
  try {
    (void)bit_width(*stream(bit(8)));
  } catch (const CompileError& err) {
    CHECK(err.diag().code == "E011");
  }
}

TEST_CASE("width property against the brute-force oracle") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 2000; ++i) {
    LogicalTypeRef t = random_type_tree(rng, 5);
    CHECK(bit_width(*t) == oracle_width(*t));
  }
}

TEST_CASE("strict equality is nominal") {
  // type A = Bit(8) and type B = Bit(8): same shape, different variables.
  LogicalTypeRef a = alias("A", bit(8));
  LogicalTypeRef b = alias("B", bit(8));
  LogicalTypeRef a2 = alias("A", bit(8));
  CHECK_FALSE(strict_eq(*a, *b));
  CHECK(strict_eq(*a, *a));
  CHECK(strict_eq(*a, *a2));
  // but hierarchy equality sees through the names
  CHECK(hierarchy_eq(*a, *b));
  // a named type never equals an anonymous one strictly
  CHECK_FALSE(strict_eq(*a, *bit(8)));
  CHECK(hierarchy_eq(*a, *bit(8)));
}

TEST_CASE("strict equality on streams compares parameters except complexity") {
  LogicalTypeRef a = alias("A", bit(8));
  CHECK_FALSE(strict_eq(*stream(a, 2), *stream(a, 1)));
  CHECK(strict_eq(*stream(a, 2), *stream(a, 2)));
  CHECK_FALSE(strict_eq(*stream(a, 0, 1, 2.0), *stream(a, 0, 1, 1.0)));
  CHECK_FALSE(
      strict_eq(*stream(a, 0, 1, 1.0, StreamDir::Reverse), *stream(a)));
  // complexity intentionally not part of type equality
  CHECK(strict_eq(*stream(a, 0, 4), *stream(a, 0, 1)));
  CHECK(hierarchy_eq(*stream(a, 0, 4), *stream(a, 0, 1)));
}

TEST_CASE("hierarchy equality compares field names") {
  LogicalTypeRef g1 = group("G1", {{"x", bit(8)}});
  LogicalTypeRef g2 = group("G2", {{"y", bit(8)}});
  LogicalTypeRef g3 = group("G3", {{"x", bit(8)}});
  CHECK_FALSE(hierarchy_eq(*g1, *g2));  // field names differ
  CHECK(hierarchy_eq(*g1, *g3));
  CHECK_FALSE(hierarchy_eq(*uni("U", {{"x", bit(8)}}), *g1));  // variant differs
}

TEST_CASE("strict implies hierarchy") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    LogicalTypeRef a = random_type_tree(rng, 4);
    LogicalTypeRef b = random_type_tree(rng, 4);
    if (strict_eq(*a, *b)) CHECK(hierarchy_eq(*a, *b));
    // reflexivity of both relations
    CHECK(strict_eq(*a, *a));
    CHECK(hierarchy_eq(*a, *a));
    // symmetry
    CHECK(strict_eq(*a, *b) == strict_eq(*b, *a));
    CHECK(hierarchy_eq(*a, *b) == hierarchy_eq(*b, *a));
  }
}

TEST_CASE("hierarchy equality is invariant under renaming") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    LogicalTypeRef t = random_type_tree(rng, 4);
    // Renaming: wrap in differently named aliases.
    LogicalTypeRef left = alias("Left" + std::to_string(i), t);
    LogicalTypeRef right = alias("Right" + std::to_string(i), t);
    CHECK(hierarchy_eq(*left, *right));
    CHECK(bit_width(*left) == bit_width(*t));  // width invariant under alias
  }
}

TEST_CASE("complexity compatibility: source must not exceed sink") {
  auto s = [&](int64_t c) {
    return std::get<StreamType>(stream(bit(8), 0, c)->node);
  };
  CHECK(complexity_compatible(s(1), s(4)));
  CHECK_FALSE(complexity_compatible(s(4), s(1)));
  CHECK(complexity_compatible(s(3), s(3)));
}

TEST_CASE("type printing is deterministic and distinguishes structure") {
  LogicalTypeRef a = stream(alias("A", bit(8)), 2, 4, 0.5);
  CHECK(type_to_string(*a) == type_to_string(*a));
  CHECK(type_to_string(*a) != type_to_string(*stream(alias("A", bit(8)), 1)));
  // canonical keys must separate same-named types from different files
  LogicalTypeRef f1 = make_type(
      LogicalType{GroupType{TypeIdentity{"f1", "G", {}, {}}, {{"a", bit(1)}}}});
  LogicalTypeRef f2 = make_type(
      LogicalType{GroupType{TypeIdentity{"f2", "G", {}, {}}, {{"a", bit(1)}}}});
  CHECK(type_key(*f1) != type_key(*f2));
  CHECK(type_to_string(*f1) == type_to_string(*f2));
}
