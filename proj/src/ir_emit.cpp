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

#include <sstream>

#include "tydic/ir.hpp"

namespace tydic {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void emit_port(std::ostringstream& out, const ElaboratedPort& p,
               const ElaboratedDesign& design) {
  out << "  port " << p.name;
  if (p.index) out << '[' << *p.index << ']';
  out << ": " << print_type_ref(*p.stream, design)
      << (p.direction == PortDirection::In ? " in" : " out") << " @"
      << quoted(p.clock_domain) << ",\n";
}

}  // namespace

std::string emit_ir(const ElaboratedDesign& design) {
  std::ostringstream out;
  out << "tir 1\n";

  for (const auto& t : design.types) {
    out << '\n';
    switch (t.kind) {
      case NamedTypeDecl::Kind::Alias:
        out << "alias " << t.emit_name << " = "
            << print_type_ref(*t.type, design) << "\n";
        break;
      case NamedTypeDecl::Kind::Group:
      case NamedTypeDecl::Kind::Union: {
        out << (t.kind == NamedTypeDecl::Kind::Group ? "group " : "union ")
            << t.emit_name << " {\n";
        const auto& fields =
            t.kind == NamedTypeDecl::Kind::Group
                ? std::get<GroupType>(t.type->node).fields
                : std::get<UnionType>(t.type->node).fields;
        for (const auto& [name, child] : fields)
          out << "  " << name << ": " << print_type_ref(*child, design)
              << ",\n";
        out << "}\n";
        break;
      }
    }
  }

  for (const auto& s : design.streamlets) {
    out << "\nstreamlet " << s.emit_name << " {\n";
    for (const auto& p : s.ports) emit_port(out, p, design);
    out << "}\n";
  }

  for (const auto& i : design.impls) {
    out << '\n';
    if (i.external) out << "external ";
    out << "impl " << i.emit_name << " of "
        << design.find_streamlet(i.streamlet)->emit_name;
    if (i.intrinsic == IntrinsicKind::Duplicator) out << " intrinsic duplicator";
    if (i.intrinsic == IntrinsicKind::Voider) out << " intrinsic voider";
    out << " {\n";
    for (const auto& inst : i.instances) {
      out << "  instance " << inst.name;
      if (inst.index) out << '[' << *inst.index << ']';
      out << ": " << design.find_impl(inst.impl)->emit_name << ",\n";
    }
    for (const auto& conn : i.connections) {
      out << "  connect " << conn.src.display() << " => "
          << conn.dst.display();
      if (conn.relax) out << " relax";
      out << ",\n";
    }
    out << "}\n";
  }

  out << "\ntop " << design.top << "\n";
  return out.str();
}

}  // namespace tydic
