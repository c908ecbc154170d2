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

#include <cmath>

#include "tydic/eval.hpp"
#include "tydic/parser.hpp"

using namespace tydic;

namespace {

Scope& empty_scope() {
  static Scope scope(nullptr, "<test>");
  return scope;
}

Value eval_text(const std::string& text, Scope& scope = empty_scope()) {
  return eval(*parse_expression(text), scope);
}

std::string eval_error(const std::string& text, Scope& scope = empty_scope()) {
  try {
    eval_text(text, scope);
  } catch (const CompileError& err) {
    return err.diag().code;
  }
  return "";
}

}  // namespace

TEST_CASE("literals") {
  CHECK(eval_text("42").as_int() == BigInt(42));
  CHECK(eval_text("1.5").as_float() == 1.5);
  CHECK(eval_text("\"hi\"").as_string() == "hi");
  CHECK(eval_text("true").as_bool());
}

TEST_CASE("integer arithmetic stays integral") {
  CHECK(eval_text("1 + 2 * 3").as_int() == BigInt(7));
  CHECK(eval_text("2 ^ 10").as_int() == BigInt(1024));
  CHECK(eval_text("10 ^ 15").as_int() == BigInt::from_string("1000000000000000"));
  CHECK(eval_text("7 - 10").as_int() == BigInt(-3));
  CHECK(eval_text("-2 ^ 2").as_int() == BigInt(4));  // (-2)^2, unary binds tighter
}

TEST_CASE("division yields Int only when exact") {
  Value exact = eval_text("8 / 2");
  REQUIRE(exact.is_int());
  CHECK(exact.as_int() == BigInt(4));
  Value inexact = eval_text("7 / 2");
  REQUIRE(inexact.is_float());
  CHECK(inexact.as_float() == doctest::Approx(3.5));
}

TEST_CASE("float operand promotes") {
  CHECK(eval_text("1 + 0.5").is_float());
  CHECK(eval_text("2.0 * 3").as_float() == 6.0);
  CHECK(eval_text("2 ^ -1").is_float());
  CHECK(eval_text("2 ^ -1").as_float() == 0.5);
  CHECK(eval_text("2.0 ^ 3").is_float());
}

TEST_CASE("the decimal-width expression evaluates exactly") {
  // ceil(log2(10^15 - 1)): 2^49 < 10^15 - 1 <= 2^50, so 50. The independent
  // oracle: bit length of (10^15 - 2) is 50.
  BigInt n = BigInt(10).pow(15) - BigInt(1);
  CHECK((n - BigInt(1)).bit_length() == 50);
  Value v = eval_text("ceil(log2(10^15-1))");
  REQUIRE(v.is_int());
  CHECK(v.as_int() == BigInt(50));
}

TEST_CASE("exact and float log2 paths agree over a wide range") {
  for (int64_t n = 2; n <= (1 << 14); ++n) {
    int64_t exact = ceil_log2(BigInt(n));
    int64_t via_float =
        static_cast<int64_t>(std::ceil(std::log2(static_cast<double>(n))));
    CAPTURE(n);
    CHECK(exact == via_float);
  }
}

TEST_CASE("ceil log2 boundaries at powers of two") {
  CHECK(ceil_log2(BigInt(1)) == 0);
  CHECK(ceil_log2(BigInt(2)) == 1);
  CHECK(ceil_log2(BigInt(3)) == 2);
  for (int k = 2; k <= 62; ++k) {
    BigInt p = BigInt(2).pow(static_cast<uint64_t>(k));
    CHECK(ceil_log2(p) == k);
    CHECK(ceil_log2(p - BigInt(1)) == k);
    CHECK(ceil_log2(p + BigInt(1)) == k + 1);
    CHECK(floor_log2(p) == k);
    CHECK(floor_log2(p - BigInt(1)) == k - 1);
  }
  // Way beyond double mantissa range the exact path keeps working.
  CHECK(ceil_log2(BigInt(2).pow(400) + BigInt(1)) == 401);
}

TEST_CASE("log of non-positive numbers") {
  CHECK(eval_error("log2(0)") == "E010");
  CHECK(eval_error("log2(-4)") == "E010");
  CHECK(eval_error("log10(0)") == "E010");
  CHECK(eval_error("ceil(log2(0))") == "E010");
}

TEST_CASE("division by zero") {
  CHECK(eval_error("1 / 0") == "E010");
  CHECK(eval_error("1.0 / 0.0") == "E010");
}

TEST_CASE("ranges are end-exclusive arrays") {
  Value v = eval_text("0-1->4");
  REQUIRE(v.is_array());
  REQUIRE(v.as_array().elements.size() == 4);
  for (int64_t i = 0; i < 4; ++i)
    CHECK(v.as_array().elements[i].as_int() == BigInt(i));
  CHECK(eval_text("0-2->8").as_array().elements.size() == 4);
  CHECK(eval_text("5-1->5").as_array().elements.size() == 0);
  CHECK(eval_text("5-1->4").as_array().elements.size() == 0);
}

TEST_CASE("range length equals max(0, ceil((end-start)/step))") {
  for (int64_t a = -6; a <= 6; ++a)
    for (int64_t b = -6; b <= 6; ++b)
      for (int64_t s = 1; s <= 4; ++s) {
        Value v = eval_text(std::to_string(a) + "-" + std::to_string(s) +
                            "->" + std::to_string(b));
        int64_t expect = std::max<int64_t>(
            0, static_cast<int64_t>(
                   std::ceil(static_cast<double>(b - a) / s)));
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(s);
        CHECK(static_cast<int64_t>(v.as_array().elements.size()) == expect);
      }
}

TEST_CASE("bad ranges") {
  CHECK(eval_error("0-0->4") == "E010");
  CHECK(eval_error("4-(-1)->0") == "E010");
  CHECK(eval_error("0-0.5->4") == "E010");
}

TEST_CASE("builtins") {
  CHECK(eval_text("ceil(1.2)").as_int() == BigInt(2));
  CHECK(eval_text("ceil(-1.2)").as_int() == BigInt(-1));
  CHECK(eval_text("floor(1.8)").as_int() == BigInt(1));
  CHECK(eval_text("ceil(3)").as_int() == BigInt(3));
  CHECK(eval_text("abs(-4)").as_int() == BigInt(4));
  CHECK(eval_text("abs(-4.5)").as_float() == 4.5);
  CHECK(eval_text("min(3, 5)").as_int() == BigInt(3));
  CHECK(eval_text("max(3, 5)").as_int() == BigInt(5));
  CHECK(eval_text("min(3, 2.5)").as_float() == 2.5);
  CHECK(eval_text("log10(1000)").as_float() == doctest::Approx(3.0));
}

TEST_CASE("string operations") {
  CHECK(eval_text("\"a\" + \"b\"").as_string() == "ab");
  CHECK(eval_text("\"a\" == \"a\"").as_bool());
  CHECK(eval_text("\"a\" != \"b\"").as_bool());
  CHECK(eval_error("\"a\" < \"b\"") == "E010");
  CHECK(eval_error("\"a\" * 2") == "E010");
}

TEST_CASE("comparisons and logic") {
  CHECK(eval_text("1 < 2").as_bool());
  CHECK(eval_text("2 <= 2").as_bool());
  CHECK(eval_text("3 > 2.5").as_bool());
  CHECK(eval_text("1 == 1.0").as_bool());
  CHECK(eval_text("true && !false").as_bool());
  CHECK(eval_text("false || true").as_bool());
  CHECK(eval_error("1 && true") == "E010");
  // Short circuit keeps the guarded division from evaluating.
  CHECK_FALSE(eval_text("false && 1 / 0 == 1").as_bool());
}

TEST_CASE("arrays and indexing") {
  Value v = eval_text("[1, 2, 3]");
  REQUIRE(v.is_array());
  CHECK(v.as_array().element_kind == ValueKind::Int);
  CHECK(eval_text("[1, 2, 3][1]").as_int() == BigInt(2));
  CHECK(eval_error("[1, 2][5]") == "E010");
  CHECK(eval_error("[1, \"a\"]") == "E010");
  CHECK(eval_error("[[1], [2]]") == "E010");
}

TEST_CASE("scope lookup, shadowing and immutability") {
  Scope outer(nullptr, "<test>");
  ScopeEntry x;
  x.kind = ScopeEntry::Kind::Value;
  x.value = Value::integer(BigInt(1));
  REQUIRE(outer.define("x", x));
  // A second binding of the same name in one scope violates immutability.
  ScopeEntry x2;
  x2.kind = ScopeEntry::Kind::Value;
  x2.value = Value::integer(BigInt(2));
  CHECK_FALSE(outer.define("x", x2));

  // Shadowing in an inner scope resolves to the innermost binding.
  Scope inner(&outer, "<test>");
  ScopeEntry shadow;
  shadow.kind = ScopeEntry::Kind::Value;
  shadow.value = Value::integer(BigInt(42));
  REQUIRE(inner.define("x", shadow));
  CHECK(eval_text("x", inner).as_int() == BigInt(42));
  CHECK(eval_text("x", outer).as_int() == BigInt(1));
  CHECK(eval_text("x + 1", inner).as_int() == BigInt(43));
}

TEST_CASE("unresolved names") {
  CHECK(eval_error("nope") == "E002");
}

TEST_CASE("assert") {
  Scope scope(nullptr, "<test>");
  eval_assert(*parse_expression("8 > 0"), scope);  // no throw
  try {
    eval_assert(*parse_expression("16 == 32"), scope);
    FAIL("expected E007");
  } catch (const CompileError& err) {
    CHECK(err.diag().code == "E007");
  }
  try {
    eval_assert(*parse_expression("\"x\""), scope);
    FAIL("expected E010");
  } catch (const CompileError& err) {
    CHECK(err.diag().code == "E010");
  }
  // assert also works in expression position and passes the value through.
  CHECK(eval_text("assert(true)").as_bool());
  CHECK(eval_error("assert(1 == 2)") == "E007");
}

TEST_CASE("evaluation is deterministic") {
  Scope scope(nullptr, "<test>");
  ExprPtr e = parse_expression("ceil(log2(7 * 6 + 1)) + 2 ^ 8 - abs(-3)");
  Value first = eval(*e, scope);
  for (int i = 0; i < 10; ++i) CHECK(eval(*e, scope) == first);
}

TEST_CASE("clock domain annotation resolution") {
  Scope scope(nullptr, "<test>");
  ScopeEntry c;
  c.kind = ScopeEntry::Kind::Value;
  c.value = Value::clock("sys_100mhz");
  scope.define("clk", c);
  // Bound name resolves to its clock value; unbound names denote themselves.
  CHECK(eval_clock_domain("clk", scope, {}) == "sys_100mhz");
  CHECK(eval_clock_domain("clk_b", scope, {}) == "clk_b");
  CHECK(eval_clock_domain("", scope, {}) == std::string("!default"));
}

namespace {

// Parses `type T = <text>;` and evaluates the right-hand side.
LogicalTypeRef eval_type_text(const std::string& text, Scope& scope) {
  ParseResult r = parse("type T = " + text + ";", 0);
  REQUIRE(r.ast.has_value());
  static std::vector<Ast> keep_alive;  // the type expr must outlive the call
  keep_alive.push_back(std::move(*r.ast));
  const auto& alias = std::get<TypeAliasDecl>(keep_alive.back().decls[0].node);
  return eval_type(*alias.type, scope);
}

}  // namespace

TEST_CASE("type evaluation basics") {
  Scope scope(nullptr, "<test>");
  LogicalTypeRef bit = eval_type_text("Bit(6 + 2)", scope);
  CHECK(bit_width(*bit) == 8);

  LogicalTypeRef stream = eval_type_text("Stream(Bit(8), d=2, c=4)", scope);
  const auto& s = std::get<StreamType>(stream->node);
  CHECK(s.dimension == 2);
  CHECK(s.complexity == 4);
  CHECK(s.throughput == 1.0);
  CHECK(s.direction == StreamDir::Forward);
  CHECK(s.synchronicity == Synchronicity::Sync);
}

TEST_CASE("type evaluation rejects bad parameters") {
  Scope scope(nullptr, "<test>");
  auto error_of = [&](const std::string& text) {
    try {
      eval_type_text(text, scope);
    } catch (const CompileError& err) {
      return err.diag().code;
    }
    return std::string();
  };
  CHECK(error_of("Bit(0)") == "E011");
  CHECK(error_of("Bit(-3)") == "E011");
  CHECK(error_of("Bit(1.5)") == "E011");
  CHECK(error_of("Stream(Bit(8), d=-1)") == "E011");
  CHECK(error_of("Stream(Bit(8), c=0)") == "E011");
  CHECK(error_of("Stream(Bit(8), t=0)") == "E011");
  CHECK(error_of("Stream(Bit(8), d=1, d=2)") == "E011");
  CHECK(error_of("Unknown") == "E002");
}
