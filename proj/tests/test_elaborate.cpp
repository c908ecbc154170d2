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

#include <set>

#include "support/compile.hpp"

using namespace tydic;
using tydic::testing::compile_corpus;
using tydic::testing::compile_one;

namespace {

const ElaboratedImpl* impl_by_prefix(const ElaboratedDesign& design,
                                     const std::string& prefix) {
  for (const auto& impl : design.impls)
    if (impl.emit_name.rfind(prefix, 0) == 0) return &impl;
  return nullptr;
}

std::string first_code(const CompileResult& result) {
  for (const auto& d : result.diagnostics.all())
    if (d.is_error()) return d.code;
  return "";
}

}  // namespace

TEST_CASE("parallelize farm elaborates to the hand-counted graph") {
  CompileResult result = compile_corpus("parallelize.td", "adder_farm");
  REQUIRE(result.exit_code == 0);
  const ElaboratedImpl* par = impl_by_prefix(result.design, "parallelize_i__");
  REQUIRE(par != nullptr);

  // Hand count from the source: one demux, one mux, channel=8 pu entries.
  int demux = 0, mux = 0, pu = 0;
  for (const auto& inst : par->instances) {
    if (inst.name == "demux_inst") ++demux;
    if (inst.name == "mux_inst") ++mux;
    if (inst.name == "pu") ++pu;
  }
  CHECK(demux == 1);
  CHECK(mux == 1);
  CHECK(pu == 8);
  for (int64_t i = 0; i < 8; ++i) {
    bool found = false;
    for (const auto& inst : par->instances)
      if (inst.name == "pu" && inst.index == i) found = true;
    CHECK(found);
  }

  // 16 connections come out of the for block, 2 are written directly.
  int loop_conns = 0;
  for (const auto& conn : par->connections) {
    bool demux_to_pu = !conn.src.self && conn.src.instance == "demux_inst" &&
                       !conn.dst.self && conn.dst.instance == "pu";
    bool pu_to_mux = !conn.src.self && conn.src.instance == "pu" &&
                     !conn.dst.self && conn.dst.instance == "mux_inst";
    if (demux_to_pu || pu_to_mux) ++loop_conns;
  }
  CHECK(loop_conns == 16);
  CHECK(par->connections.size() == 18);
}

TEST_CASE("memoization: equal arguments share one elaborated impl") {
  CompileResult result = compile_one(R"(
type T = Stream(Bit(8));
streamlet s<X: type> { p: X in, }
external impl e<X: type> of s<type X> {}
streamlet top_s { a: T in, b: T in, }
impl top of top_s {
  instance one(e<type T>),
  instance two(e<type T>),
  a => one.p,
  b => two.p,
}
)",
                                     "top");
  REQUIRE(result.exit_code == 0);
  int shared = 0;
  for (const auto& impl : result.design.impls)
    if (impl.emit_name.rfind("e__", 0) == 0) ++shared;
  CHECK(shared == 1);  // both instances reference the same declaration
  const ElaboratedImpl* top = impl_by_prefix(result.design, "top");
  REQUIRE(top != nullptr);
  REQUIRE(top->instances.size() == 2);
  CHECK(top->instances[0].impl == top->instances[1].impl);
}

TEST_CASE("distinct arguments do not collide") {
  CompileResult result = compile_one(R"(
type T = Stream(Bit(8));
type U = Stream(Bit(9));
streamlet s<X: type> { p: X in, }
external impl e<X: type> of s<type X> {}
streamlet top_s { a: T in, b: U in, }
impl top of top_s {
  instance one(e<type T>),
  instance two(e<type U>),
  a => one.p,
  b => two.p,
}
)",
                                     "top");
  REQUIRE(result.exit_code == 0);
  int count = 0;
  for (const auto& impl : result.design.impls)
    if (impl.emit_name.rfind("e__", 0) == 0) ++count;
  CHECK(count == 2);
}

TEST_CASE("template argument forwarding reaches the streamlet") {
  // void_i-style: the impl's type parameter feeds its streamlet's template.
  CompileResult result = compile_one(R"(
type Payload = Stream(Bit(16));
streamlet void_s<T: type> { input: T in, }
external impl void_i2<T: type> of void_s<type T> {}
streamlet top_s { x: Payload in, }
impl top of top_s {
  instance v(void_i2<type Payload>),
  x => v.input,
}
)",
                                     "top");
  REQUIRE(result.exit_code == 0);
  const ElaboratedImpl* v = impl_by_prefix(result.design, "void_i2__");
  REQUIRE(v != nullptr);
  const ElaboratedStreamlet& s = result.design.streamlet_of(*v);
  CHECK(s.emit_name.rfind("void_s__", 0) == 0);
  CHECK(s.emit_name.find("Payload") != std::string::npos);
}

TEST_CASE("for over an empty range expands to nothing") {
  CompileResult result = compile_one(R"(
streamlet top_s { }
impl top of top_s {
  for i in 0-1->0 {
    assert(false),
  }
}
)",
                                     "top");
  CHECK(result.exit_code == 0);  // body never expanded, assert never runs
  const ElaboratedImpl* top = impl_by_prefix(result.design, "top");
  CHECK(top->connections.empty());
  CHECK(top->instances.empty());
}

TEST_CASE("for over a string array declares one instance per element") {
  CompileResult result = compile_one(R"(
type Txt = Stream(Bit(8), d=1);
type Flag = Stream(Bit(1));
[string] containers = ["MED BAG", "MED BOX", "MED PKG", "MED PACK"];
streamlet cmp_s<ref_value: string> { input: Txt in, match: Flag out, }
external impl cmp_i<ref_value: string> of cmp_s<ref_value> {}
streamlet or_s<count: int> { input: Flag in [count], output: Flag out, }
external impl or_i<count: int> of or_s<count> { assert(count >= 2), }
streamlet top_s { column: Txt in, matched: Flag out, }
impl top of top_s {
  instance any(or_i<4>),
  for i in 0-1->4 {
    instance cmp(cmp_i<containers[i]>),
    column => cmp.input,
    cmp.match => any.input[i],
  }
  any.output => matched,
}
)",
                                     "top");
  REQUIRE(result.exit_code == 0);
  const ElaboratedImpl* top = impl_by_prefix(result.design, "top");
  REQUIRE(top != nullptr);
  // 4 comparator instances with distinct template arguments plus the gate.
  int comparators = 0;
  std::set<std::string> distinct;
  for (const auto& inst : top->instances)
    if (inst.name.rfind("cmp", 0) == 0 &&
        inst.name.rfind("cmp", 0) != std::string::npos &&
        inst.name.find("__dup") == std::string::npos) {
      ++comparators;
      distinct.insert(result.design.find_impl(inst.impl)->emit_name);
    }
  CHECK(comparators == 4);
  CHECK(distinct.size() == 4);
  // column fans out to all four; sugaring inserted a duplicator for it.
  CHECK(impl_by_prefix(result.design, "duplicator_i__") != nullptr);
}

TEST_CASE("if expands body only when true") {
  CompileResult result = compile_one(R"(
type T = Stream(Bit(32));
streamlet pass_s { input: T in, output: T out, }
external impl pass_i of pass_s {}
int width = 32;
streamlet top_s { x: T in, y: T out, }
impl top of top_s {
  if (width == 32) {
    instance p(pass_i),
    x => p.input,
    p.output => y,
  }
  if (width == 16) {
    assert(false),
  }
}
)",
                                     "top");
  REQUIRE(result.exit_code == 0);
  const ElaboratedImpl* top = impl_by_prefix(result.design, "top");
  CHECK(top->instances.size() == 1);
  CHECK(top->connections.size() == 2);
}

TEST_CASE("instance array of size zero rejects any reference") {
  CompileResult result = compile_one(R"(
type T = Stream(Bit(8));
streamlet s { p: T in, }
external impl e of s {}
streamlet top_s { x: T in, }
impl top of top_s {
  instance u(e) [0],
  x => u[0].p,
}
)",
                                     "top");
  CHECK(result.exit_code == 1);
  CHECK(first_code(result) == "E002");
}

TEST_CASE("out of range instance index") {
  CompileResult result = compile_one(R"(
type T = Stream(Bit(8));
streamlet s { p: T in, }
external impl e of s {}
streamlet top_s { x: T in, }
impl top of top_s {
  instance u(e) [2],
  x => u[2].p,
}
)",
                                     "top");
  CHECK(result.exit_code == 1);
  CHECK(first_code(result) == "E002");
}

TEST_CASE("port array sized by a template int") {
  CompileResult result = compile_one(R"(
type Flag = Stream(Bit(1));
streamlet or_s<count: int> { input: Flag in [count], output: Flag out, }
external impl or_i<count: int> of or_s<count> { assert(count >= 2), }
streamlet top_s { a: Flag in, b: Flag in, c: Flag in, out0: Flag out, }
impl top of top_s {
  instance gate(or_i<3>),
  a => gate.input[0],
  b => gate.input[1],
  c => gate.input[2],
  gate.output => out0,
}
)",
                                     "top");
  REQUIRE(result.exit_code == 0);
  const ElaboratedImpl* gate = impl_by_prefix(result.design, "or_i__");
  REQUIRE(gate != nullptr);
  const ElaboratedStreamlet& s = result.design.streamlet_of(*gate);
  int inputs = 0;
  for (const auto& p : s.ports)
    if (p.name == "input") ++inputs;
  CHECK(inputs == 3);
}

TEST_CASE("template recursion depth is bounded") {
  CompileResult result = compile_corpus("bad/e009_recursion.td", "top");
  CHECK(result.exit_code == 1);
  CHECK(first_code(result) == "E009");
}

TEST_CASE("argument arity and kind errors") {
  const char* base = R"(
type T = Stream(Bit(8));
streamlet s<X: type, n: int> { p: X in, }
external impl e<X: type, n: int> of s<type X, n> {}
streamlet top_s { x: T in, }
impl top of top_s {
  instance u(%ARGS%),
  x => u.p,
}
)";
  auto with_args = [&](const std::string& args) {
    std::string text = base;
    text.replace(text.find("%ARGS%"), 6, args);
    return compile_one(text, "top");
  };
  CHECK(first_code(with_args("e<type T>")) == "E009");          // arity
  CHECK(first_code(with_args("e<type T, 2, 3>")) == "E009");    // arity
  CHECK(first_code(with_args("e<1, 2>")) == "E009");            // kind
  CHECK(first_code(with_args("e<type T, type T>")) == "E009");  // kind
  CHECK(with_args("e<type T, 4>").exit_code == 0);
}

TEST_CASE("impl-of argument must derive from the named streamlet") {
  CompileResult result = compile_one(R"(
type T = Stream(Bit(8));
streamlet want_s { input: T in, output: T out, }
streamlet other_s { input: T in, output: T out, }
external impl other_i of other_s {}
streamlet wrap_s { input: T in, output: T out, }
impl wrap_i<pu: impl of want_s> of wrap_s {
  instance u(pu),
  input => u.input,
  u.output => output,
}
streamlet top_s { x: T in, y: T out, }
impl top of top_s {
  instance w(wrap_i<impl other_i>),
  x => w.input,
  w.output => y,
}
)",
                                     "top");
  CHECK(result.exit_code == 1);
  CHECK(first_code(result) == "E009");
}

TEST_CASE("external impls cannot contain structure") {
  CompileResult result = compile_one(R"(
type T = Stream(Bit(8));
streamlet s { p: T in, }
streamlet o_s { q: T out, }
external impl o_i of o_s {}
external impl e of s {
  instance x(o_i),
}
streamlet top_s { y: T in, }
impl top of top_s {
  instance u(e),
  y => u.p,
}
)",
                                     "top");
  CHECK(result.exit_code == 1);
  CHECK(first_code(result) == "E009");
}

TEST_CASE("elaboration is deterministic") {
  CompileResult a = compile_corpus("queries/q6.td", "q6");
  CompileResult b = compile_corpus("queries/q6.td", "q6");
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  CHECK(design_equal(a.design, b.design));
}

TEST_CASE("shadowing: loop variable wins over outer constant") {
  CompileResult result = compile_one(R"(
int i = 99;
streamlet top_s { }
impl top of top_s {
  for i in 0-1->3 {
    assert(i < 3),
  }
  assert(i == 99),
}
)",
                                     "top");
  CHECK(result.exit_code == 0);
}

TEST_CASE("resolve reports duplicate bindings and unresolved names") {
  CHECK(first_code(compile_corpus("bad/e008_rebind.td", "top")) == "E008");
  CHECK(first_code(compile_corpus("bad/e002_unresolved.td", "top")) == "E002");
}

TEST_CASE("cyclic constants and cyclic type aliases are caught") {
  CompileResult consts = compile_one(R"(
int a = b + 1;
int b = a + 1;
streamlet top_s { p: Stream(Bit(a)) in, }
impl top of top_s { p => p, }
)",
                                     "top");
  CHECK(consts.exit_code == 1);
  CHECK(first_code(consts) == "E010");
  CHECK(consts.diagnostics[0].message.find("cyclic") != std::string::npos);

  CompileResult types = compile_one(R"(
type A = B;
type B = A;
streamlet top_s { p: A in, }
impl top of top_s { p => p, }
)",
                                    "top");
  CHECK(types.exit_code == 1);
  CHECK(first_code(types) == "E010");
}

TEST_CASE("the top impl must exist and must not be templated") {
  CompileResult missing = compile_one("int x = 1;\n", "nowhere");
  CHECK(missing.exit_code == 1);
  CHECK(first_code(missing) == "E002");

  CompileResult templated = compile_one(R"(
streamlet s<n: int> { p: Stream(Bit(n)) in, }
impl generic<n: int> of s<n> { }
)",
                                        "generic");
  CHECK(templated.exit_code == 1);
  CHECK(first_code(templated) == "E009");
}

TEST_CASE("instantiating a portless impl inside another impl") {
  CompileResult result = compile_one(R"(
streamlet empty_s { }
external impl empty_i of empty_s {}
streamlet top_s { }
impl top of top_s {
  instance nothing(empty_i),
}
)",
                                     "top");
  CHECK(result.exit_code == 0);
}

TEST_CASE("imports make another file's types visible") {
  BuildConfig config;
  config.top = "top";
  std::ostringstream log;
  CompileResult result = compile_strings(
      {{"a.td", "type Payload = Stream(Bit(8));\n"},
       {"b.td",
        "import \"a.td\";\n"
        "streamlet snk_s { p: Payload in, }\n"
        "external impl snk of snk_s {}\n"
        "streamlet top_s { x: Payload in, }\n"
        "impl top of top_s {\n"
        "  instance u(snk),\n"
        "  x => u.p,\n"
        "}\n"}},
      config, log);
  CHECK(result.exit_code == 0);
}

TEST_CASE("import cycle is reported") {
  BuildConfig config;
  config.top = "top";
  std::ostringstream log;
  CompileResult result = compile_strings(
      {{"a.td", "import \"b.td\";\nint x = 1;\n"},
       {"b.td", "import \"a.td\";\nint y = 2;\n"}},
      config, log);
  CHECK(result.exit_code == 1);
  CHECK(first_code(result) == "E002");
}
