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

#include <map>

#include "support/compile.hpp"
#include "tydic/elaborate.hpp"
#include "tydic/ir.hpp"
#include "tydic/parser.hpp"
#include "tydic/stdlib.hpp"
#include "tydic/sugar.hpp"

using namespace tydic;
using tydic::testing::compile_one;

namespace {

// A source with one output feeding k sinks.
std::string fanout_design(int k) {
  std::string text = R"(
type T = Stream(Bit(8));
streamlet src_s { o: T out, }
external impl src_i of src_s {}
streamlet snk_s { i: T in, }
external impl snk_i of snk_s {}
streamlet top_s { }
impl top of top_s {
  instance producer(src_i),
)";
  for (int i = 0; i < k; ++i)
    text += "  instance consumer" + std::to_string(i) + "(snk_i),\n";
  for (int i = 0; i < k; ++i)
    text += "  producer.o => consumer" + std::to_string(i) + ".i,\n";
  text += "}\n";
  return text;
}

const ElaboratedImpl* find_top(const ElaboratedDesign& design) {
  return design.find_impl_by_name(design.top);
}

std::map<std::string, int> fanouts(const ElaboratedImpl& impl) {
  std::map<std::string, int> out;
  for (const auto& conn : impl.connections) ++out[conn.src.slot_key()];
  return out;
}

}  // namespace

TEST_CASE("fan-out 1 stays untouched") {
  CompileResult result = compile_one(fanout_design(1), "top");
  REQUIRE(result.exit_code == 0);
  const ElaboratedImpl* top = find_top(result.design);
  CHECK(top->instances.size() == 2);
  CHECK(top->connections.size() == 1);
  for (const auto& impl : result.design.impls)
    CHECK(impl.intrinsic != IntrinsicKind::Duplicator);
}

TEST_CASE("fan-out k gets one duplicator with k outputs") {
  for (int k : {2, 3, 4}) {
    CAPTURE(k);
    CompileResult result = compile_one(fanout_design(k), "top");
    REQUIRE(result.exit_code == 0);  // zero E004 with sugaring on
    const ElaboratedImpl* top = find_top(result.design);

    // one inserted duplicator instance with a deterministic name
    const ElaboratedInstance* dup = nullptr;
    for (const auto& inst : top->instances)
      if (inst.name.rfind("__dup_", 0) == 0) {
        CHECK(dup == nullptr);
        dup = &inst;
      }
    REQUIRE(dup != nullptr);
    CHECK(dup->name == "__dup_producer_o");

    const ElaboratedImpl* dup_impl = result.design.find_impl(dup->impl);
    REQUIRE(dup_impl != nullptr);
    CHECK(dup_impl->intrinsic == IntrinsicKind::Duplicator);
    CHECK(dup_impl->external);
    // duplicator port map: 1 input + k outputs of the source's stream type
    const ElaboratedStreamlet& s = result.design.streamlet_of(*dup_impl);
    int outs = 0;
    for (const auto& p : s.ports)
      if (p.direction == PortDirection::Out) ++outs;
    CHECK(outs == k);

    // k+1 connections replace the k originals
    CHECK(static_cast<int>(top->connections.size()) == k + 1);

    // connectivity: each original sink is fed from the duplicator, in the
    // original textual order
    for (int i = 0; i < k; ++i) {
      const auto& conn = top->connections[static_cast<size_t>(i) + 1];
      CHECK(conn.src.instance == "__dup_producer_o");
      CHECK(conn.src.port_index == i);
      CHECK(conn.dst.instance == "consumer" + std::to_string(i));
    }
    // and the producer feeds the duplicator where the first fan-out stood
    CHECK(top->connections[0].src.instance == "producer");
    CHECK(top->connections[0].dst.instance == "__dup_producer_o");

    // after sugaring every source has fan-out exactly one
    for (const auto& [slot, n] : fanouts(*top)) CHECK(n == 1);
  }
}

TEST_CASE("without sugaring the same design fails the usage rule") {
  CompileResult result = compile_one(fanout_design(2), "top", false);
  CHECK(result.exit_code == 1);
  int e004 = 0;
  for (const auto& d : result.diagnostics.all())
    if (d.code == "E004") ++e004;
  CHECK(e004 >= 1);
}

TEST_CASE("voiders pick up unused outputs, sinks stay flagged") {
  // producer with three outputs, only one consumed
  const char* text = R"(
type T = Stream(Bit(8));
streamlet src3_s { a: T out, b: T out, c: T out, }
external impl src3_i of src3_s {}
streamlet snk_s { i: T in, }
external impl snk_i of snk_s {}
streamlet top_s { }
impl top of top_s {
  instance producer(src3_i),
  instance consumer(snk_i),
  producer.a => consumer.i,
}
)";
  CompileResult sugared = compile_one(text, "top");
  REQUIRE(sugared.exit_code == 0);
  const ElaboratedImpl* top = find_top(sugared.design);
  int voiders = 0;
  for (const auto& inst : top->instances)
    if (inst.name.rfind("__void_", 0) == 0) ++voiders;
  CHECK(voiders == 2);  // producer.b and producer.c
  bool b_voided = false, c_voided = false;
  for (const auto& inst : top->instances) {
    if (inst.name == "__void_producer_b") b_voided = true;
    if (inst.name == "__void_producer_c") c_voided = true;
  }
  CHECK(b_voided);
  CHECK(c_voided);

  // an unused *input* is not voided away: E004 persists with sugaring on
  const char* unused_sink = R"(
type T = Stream(Bit(8));
streamlet snk_s { i: T in, }
external impl snk_i of snk_s {}
streamlet top_s { }
impl top of top_s {
  instance consumer(snk_i),
}
)";
  CompileResult still_bad = compile_one(unused_sink, "top");
  CHECK(still_bad.exit_code == 1);
  REQUIRE(still_bad.diagnostics.size() == 1);
  CHECK(still_bad.diagnostics[0].code == "E004");
}

TEST_CASE("fully connected designs pass through unchanged") {
  CompileResult result = compile_one(fanout_design(1), "top");
  REQUIRE(result.exit_code == 0);
  const ElaboratedImpl* top = find_top(result.design);
  for (const auto& inst : top->instances) {
    CHECK(inst.name.rfind("__dup_", 0) != 0);
    CHECK(inst.name.rfind("__void_", 0) != 0);
  }
}

TEST_CASE("sugaring is idempotent, byte-identical IR") {
  // Run the pipeline by hand so the second application happens before
  // finalize.
  SourceManager sm;
  FileId builtin_id = sm.add(stdlib_file_name(), stdlib_source());
  std::string text = fanout_design(3);
  FileId main_id = sm.add("main.td", text);
  ParseResult builtin = parse(stdlib_source(), builtin_id);
  ParseResult main = parse(text, main_id);
  REQUIRE(builtin.ast.has_value());
  REQUIRE(main.ast.has_value());
  std::vector<const Ast*> files = {&*main.ast};
  ResolveResult scopes = resolve(sm, &*builtin.ast, files);
  REQUIRE_FALSE(scopes.diagnostics.has_errors());

  Elaborator elab(sm, scopes);
  TypeIdentity top = elab.instantiate_top("top");
  apply_sugaring(elab);
  ElaboratedDesign once = elab.working_design();  // copy after one pass
  apply_sugaring(elab);                            // second pass on the live design
  ElaboratedDesign twice = elab.working_design();

  finalize_design(once);
  once.top = once.find_impl(top)->emit_name;
  finalize_design(twice);
  twice.top = twice.find_impl(top)->emit_name;
  CHECK(design_equal(once, twice));
  CHECK(emit_ir(once) == emit_ir(twice));
}

TEST_CASE("duplicators inherit the source port's clock domain") {
  const char* text = R"(
type T = Stream(Bit(8));
streamlet src_s { o: T out @fast_clk, }
external impl src_i of src_s {}
streamlet snk_s { i: T in @fast_clk, }
external impl snk_i of snk_s {}
streamlet top_s { }
impl top of top_s {
  instance producer(src_i),
  instance c0(snk_i),
  instance c1(snk_i),
  producer.o => c0.i,
  producer.o => c1.i,
}
)";
  CompileResult result = compile_one(text, "top");
  // If the duplicator sat on the default domain, the rewired connections
  // would fail the clock rule.
  REQUIRE(result.exit_code == 0);
  const ElaboratedImpl* dup = nullptr;
  for (const auto& impl : result.design.impls)
    if (impl.intrinsic == IntrinsicKind::Duplicator) dup = &impl;
  REQUIRE(dup != nullptr);
  for (const auto& p : result.design.streamlet_of(*dup).ports)
    CHECK(p.clock_domain == "fast_clk");
}

TEST_CASE("query corpus relies on both passes") {
  CompileResult result = tydic::testing::compile_corpus("queries/q1.td", "q1");
  REQUIRE(result.exit_code == 0);
  const ElaboratedImpl* top = find_top(result.design);
  bool has_dup = false, has_void = false;
  for (const auto& inst : top->instances) {
    if (inst.name.rfind("__dup_", 0) == 0) has_dup = true;
    if (inst.name.rfind("__void_", 0) == 0) has_void = true;
  }
  CHECK(has_dup);   // the keep signal fans out to three filters
  CHECK(has_void);  // unused reader columns
  for (const auto& [slot, n] : fanouts(*top)) CHECK(n == 1);
}
