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

#include "support/compile.hpp"
#include "tydic/ir.hpp"

using namespace tydic;
using tydic::testing::compile_corpus;
using tydic::testing::compile_one;

namespace {

struct CorpusEntry {
  const char* file;
  const char* top;
};

const CorpusEntry kCorpus[] = {
    {"parallelize.td", "adder_farm"},
    {"queries/q1.td", "q1"},
    {"queries/q6.td", "q6"},
    {"queries/q19.td", "q19"},
};

}  // namespace

TEST_CASE("round trip over the corpus") {
  for (const auto& entry : kCorpus) {
    CAPTURE(entry.file);
    CompileResult result = compile_corpus(entry.file, entry.top);
    REQUIRE(result.exit_code == 0);
    std::string text = emit_ir(result.design);
    ElaboratedDesign read_back = read_ir(text);
    CHECK(design_equal(read_back, result.design));
    // emit o read o emit is a fixed point
    CHECK(emit_ir(read_back) == text);
  }
}

TEST_CASE("emission is deterministic for one design") {
  CompileResult result = compile_corpus("queries/q6.td", "q6");
  REQUIRE(result.exit_code == 0);
  CHECK(emit_ir(result.design) == emit_ir(result.design));
}

TEST_CASE("small design document structure") {
  CompileResult result = compile_one(R"(
Group Payload { data: Bit(8), flag: Bit(1), }
type T = Stream(Payload);
streamlet s_s { i: T in, o: T out, }
external impl pass(ignore: int)broken
)",
                                     "top");
  CHECK(result.exit_code == 1);  // parse error path sanity
  CompileResult good = compile_one(R"(
Group Payload { data: Bit(8), flag: Bit(1), }
type T = Stream(Payload);
streamlet s_s { i: T in, o: T out, }
external impl pass_i of s_s {}
streamlet top_s { x: T in, y: T out, }
impl top of top_s {
  instance u(pass_i),
  x => u.i,
  u.o => y,
}
)",
                                   "top");
  REQUIRE(good.exit_code == 0);
  std::string text = emit_ir(good.design);
  // one group, one alias, dependencies first
  size_t group_pos = text.find("group Payload");
  size_t alias_pos = text.find("alias T");
  size_t streamlet_pos = text.find("streamlet s_s");
  size_t impl_pos = text.find("external impl pass_i of s_s");
  size_t top_pos = text.find("\ntop top\n");
  REQUIRE(group_pos != std::string::npos);
  REQUIRE(alias_pos != std::string::npos);
  REQUIRE(streamlet_pos != std::string::npos);
  REQUIRE(impl_pos != std::string::npos);
  REQUIRE(top_pos != std::string::npos);
  CHECK(group_pos < alias_pos);
  CHECK(alias_pos < streamlet_pos);
  CHECK(streamlet_pos < impl_pos);
  // every entity appears exactly once
  CHECK(text.find("group Payload", group_pos + 1) == std::string::npos);
}

TEST_CASE("memoized instantiations show up once with two references") {
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
  std::string text = emit_ir(result.design);
  size_t first = text.find("external impl e__T of");
  REQUIRE(first != std::string::npos);
  CHECK(text.find("external impl e__T of", first + 1) == std::string::npos);
  CHECK(text.find("instance one: e__T") != std::string::npos);
  CHECK(text.find("instance two: e__T") != std::string::npos);
}

TEST_CASE("intrinsics and relax flags survive the round trip") {
  CompileResult result = compile_one(R"(
type A = Stream(Bit(8));
type B = Stream(Bit(8));
streamlet src_s { o: A out, }
external impl src_i of src_s {}
streamlet snk_s { i: B in, }
external impl snk_i of snk_s {}
streamlet top_s { }
impl top of top_s {
  instance x(src_i),
  instance y0(snk_i),
  instance y1(snk_i),
  x.o => y0.i @NoStrictType,
  x.o => y1.i @NoStrictType,
}
)",
                                     "top");
  REQUIRE(result.exit_code == 0);
  std::string text = emit_ir(result.design);
  CHECK(text.find("intrinsic duplicator") != std::string::npos);
  CHECK(text.find(" relax,") != std::string::npos);
  ElaboratedDesign read_back = read_ir(text);
  CHECK(design_equal(read_back, result.design));
  bool found_dup = false;
  for (const auto& impl : read_back.impls)
    if (impl.intrinsic == IntrinsicKind::Duplicator) found_dup = true;
  CHECK(found_dup);
}

TEST_CASE("stream parameters are lossless") {
  CompileResult result = compile_one(R"(
type T = Stream(Bit(5), d=3, t=2.5, c=6, s="FlatDesync");
streamlet snk_s { i: T in, }
external impl snk_i of snk_s {}
streamlet top_s { x: T in, }
impl top of top_s {
  instance u(snk_i),
  x => u.i,
}
)",
                                     "top");
  REQUIRE(result.exit_code == 0);
  std::string text = emit_ir(result.design);
  CHECK(text.find("Stream(Bit(5), d=3, r=Forward, t=2.5, c=6, s=\"FlatDesync\")") !=
        std::string::npos);
  ElaboratedDesign read_back = read_ir(text);
  CHECK(design_equal(read_back, result.design));
}

TEST_CASE("cross-file name reuse stays unique in the document") {
  BuildConfig config;
  config.top = "top";
  std::ostringstream log;
  CompileResult result = compile_strings(
      {{"a.td",
        "type T = Stream(Bit(8));\n"
        "streamlet worker_s { p: T in, }\n"
        "external impl worker of worker_s {}\n"},
       {"b.td",
        "type T = Stream(Bit(9));\n"
        "streamlet worker_s { p: T in, }\n"
        "external impl worker of worker_s {}\n"},
       {"wrap_a.td",
        "import \"a.td\";\n"
        "streamlet use_a_s { x: T in, }\n"
        "impl use_a of use_a_s {\n  instance w(worker),\n  x => w.p,\n}\n"},
       {"wrap_b.td",
        "import \"b.td\";\n"
        "streamlet use_b_s { x: T in, }\n"
        "impl use_b of use_b_s {\n  instance w(worker),\n  x => w.p,\n}\n"},
       {"main.td",
        "import \"wrap_a.td\";\n"
        "import \"wrap_b.td\";\n"
        "streamlet top_s { a: Stream(Bit(8)) in, b: Stream(Bit(9)) in, }\n"
        "impl top of top_s {\n"
        "  instance ua(use_a),\n"
        "  instance ub(use_b),\n"
        "  a => ua.x @NoStrictType,\n"
        "  b => ub.x @NoStrictType,\n"
        "}\n"}},
      config, log);
  REQUIRE(result.exit_code == 0);
  // two impls named worker, two streamlets named worker_s, two aliases T
  std::set<std::string> impl_names, type_names;
  int workers = 0;
  for (const auto& impl : result.design.impls) {
    CHECK(impl_names.insert(impl.emit_name).second);
    if (impl.emit_name.rfind("worker", 0) == 0 &&
        impl.emit_name.rfind("worker_s", 0) != 0)
      ++workers;
  }
  CHECK(workers == 2);
  int aliases = 0;
  for (const auto& t : result.design.types) {
    CHECK(type_names.insert(t.emit_name).second);
    if (t.emit_name.rfind("T", 0) == 0) ++aliases;
  }
  CHECK(aliases == 2);
  // and the whole thing still round-trips
  std::string text = emit_ir(result.design);
  CHECK(design_equal(read_ir(text), result.design));
}

TEST_CASE("truncated documents are rejected") {
  CompileResult result = compile_corpus("queries/q6.td", "q6");
  REQUIRE(result.exit_code == 0);
  std::string text = emit_ir(result.design);
  CHECK_THROWS_AS(read_ir(text.substr(0, text.size() / 2)), CompileError);
  CHECK_THROWS_AS(read_ir("tir 1\n"), CompileError);
  CHECK_THROWS_AS(read_ir("nonsense"), CompileError);
  CHECK_THROWS_AS(read_ir(""), CompileError);
}

TEST_CASE("unknown type names are rejected (no forward references)") {
  CHECK_THROWS_AS(read_ir("tir 1\nalias A = NotDeclared\ntop x\n"),
                  CompileError);
}
