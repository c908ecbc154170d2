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

#include "tydic/vhdl.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "tydic/elaborate.hpp"
#include "tydic/eval.hpp"

namespace tydic {

int64_t lane_count(const StreamType& stream) {
  return std::max<int64_t>(
      1, static_cast<int64_t>(std::ceil(stream.throughput)));
}

int64_t data_width(const StreamType& stream) {
  return lane_count(stream) * bit_width(*stream.element);
}

int64_t tag_width(const StreamType& stream) {
  const auto* u = std::get_if<UnionType>(&stream.element->resolved().node);
  if (u == nullptr) return 0;
  return ceil_log2(BigInt(static_cast<int64_t>(u->fields.size())));
}

std::vector<PhysicalSignal> physical_signals(const ElaboratedPort& port,
                                             const std::string& base) {
  const auto& stream = std::get<StreamType>(port.stream->resolved().node);
  PortDirection fwd = port.direction;
  PortDirection rev = fwd == PortDirection::In ? PortDirection::Out
                                               : PortDirection::In;
  std::vector<PhysicalSignal> out;
  int64_t w = data_width(stream);
  if (w > 0)
    out.push_back({PhysicalSignal::Role::Data, base + "_data", fwd, w});
  out.push_back({PhysicalSignal::Role::Valid, base + "_valid", fwd, 0});
  out.push_back({PhysicalSignal::Role::Ready, base + "_ready", rev, 0});
  if (stream.dimension >= 1)
    out.push_back(
        {PhysicalSignal::Role::Last, base + "_last", fwd, stream.dimension});
  int64_t tw = tag_width(stream);
  if (tw > 0)
    out.push_back({PhysicalSignal::Role::Tag, base + "_tag", fwd, tw});
  return out;
}

namespace {

const std::set<std::string>& vhdl_keywords() {
  static const std::set<std::string> kw = {
      "abs", "access", "after", "alias", "all", "and", "architecture",
      "array", "assert", "attribute", "begin", "block", "body", "buffer",
      "bus", "case", "component", "configuration", "constant", "disconnect",
      "downto", "else", "elsif", "end", "entity", "exit", "file", "for",
      "function", "generate", "generic", "group", "guarded", "if", "impure",
      "in", "inertial", "inout", "is", "label", "library", "linkage",
      "literal", "loop", "map", "mod", "nand", "new", "next", "nor", "not",
      "null", "of", "on", "open", "or", "others", "out", "package", "port",
      "postponed", "procedure", "process", "pure", "range", "record",
      "register", "reject", "rem", "report", "return", "rol", "ror",
      "select", "severity", "signal", "shared", "sla", "sll", "sra", "srl",
      "subtype", "then", "to", "transport", "type", "unaffected", "units",
      "until", "use", "variable", "wait", "when", "while", "with", "xnor",
      "xor"};
  return kw;
}

std::string lowercased(const std::string& s) {
  std::string out = s;
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

/// Case-insensitive unique-name pool (VHDL identifiers are case
/// insensitive). Collisions resolve by numeric suffix, never silently.
class NamePool {
 public:
  /// Claims `base` such that base and base+suffix for every given suffix are
  /// all free; returns the possibly suffixed base.
  std::string claim(const std::string& base,
                    const std::vector<std::string>& suffixes = {}) {
    std::string candidate = base;
    int n = 1;
    while (!fits(candidate, suffixes)) {
      ++n;
      candidate = base + "_" + std::to_string(n);
    }
    used_.insert(lowercased(candidate));
    for (const auto& s : suffixes) used_.insert(lowercased(candidate + s));
    return candidate;
  }

  void reserve(const std::string& name) { used_.insert(lowercased(name)); }

 private:
  bool fits(const std::string& candidate,
            const std::vector<std::string>& suffixes) const {
    if (used_.count(lowercased(candidate))) return false;
    for (const auto& s : suffixes)
      if (used_.count(lowercased(candidate + s))) return false;
    return true;
  }

  std::set<std::string> used_;
};

const std::vector<std::string>& signal_suffixes() {
  static const std::vector<std::string> s = {"_data", "_valid", "_ready",
                                             "_last", "_tag"};
  return s;
}

std::string range_of(int64_t width) {
  return "(" + std::to_string(width - 1) + " downto 0)";
}

std::string signal_type(const PhysicalSignal& sig) {
  if (sig.width == 0) return "std_logic";
  return "std_logic_vector" + range_of(sig.width);
}

const char* dir_text(PortDirection d) {
  return d == PortDirection::In ? "in " : "out";
}

const char* sync_text(Synchronicity s) {
  switch (s) {
    case Synchronicity::Sync: return "Sync";
    case Synchronicity::Flatten: return "Flatten";
    case Synchronicity::Desync: return "Desync";
    case Synchronicity::FlatDesync: return "FlatDesync";
  }
  return "?";
}

/// Per-streamlet port plan: sanitized unique base name plus the signal set,
/// in declaration order.
struct PortPlan {
  const ElaboratedPort* port;
  std::string base;
  std::vector<PhysicalSignal> signals;
};

std::vector<PortPlan> plan_ports(const ElaboratedStreamlet& streamlet) {
  NamePool pool;
  std::vector<PortPlan> plans;
  for (const auto& p : streamlet.ports) {
    std::string raw = p.name;
    if (p.index) raw += "_" + std::to_string(*p.index);
    PortPlan plan;
    plan.port = &p;
    plan.base = pool.claim(sanitize_vhdl_name(raw), signal_suffixes());
    plan.signals = physical_signals(p, plan.base);
    plans.push_back(std::move(plan));
  }
  return plans;
}

void emit_port_clause(std::ostringstream& out, const std::vector<PortPlan>& plans,
                      const ElaboratedDesign& design, const std::string& indent,
                      bool with_comments) {
  if (plans.empty()) return;
  out << indent << "port (\n";
  std::vector<std::string> lines;
  for (const auto& plan : plans) {
    const auto& stream =
        std::get<StreamType>(plan.port->stream->resolved().node);
    if (with_comments) {
      out << indent << "  -- " << plan.port->display() << ": "
          << print_type_ref(*plan.port->stream, design) << ", clock @"
          << plan.port->clock_domain << ", c=" << stream.complexity
          << ", s=" << sync_text(stream.synchronicity) << "\n";
    }
    for (const auto& sig : plan.signals)
      lines.push_back(indent + "  " + sig.name + " : " +
                      dir_text(sig.direction) + " " + signal_type(sig));
  }
  for (size_t i = 0; i < lines.size(); ++i)
    out << lines[i] << (i + 1 == lines.size() ? "\n" : ";\n");
  out << indent << ");\n";
}

std::string contract_comment(const ElaboratedImpl& impl,
                             const std::vector<PortPlan>& plans) {
  std::ostringstream out;
  out << "  -- External implementation: this architecture is a structural\n"
         "  -- shell; the behavior is provided outside the language.\n"
         "  --\n";
  switch (impl.intrinsic) {
    case IntrinsicKind::Duplicator:
      out << "  -- Contract (duplicator): every accepted input packet is\n"
             "  -- presented on all outputs; the input is acknowledged only\n"
             "  -- when every output has accepted its copy.\n";
      break;
    case IntrinsicKind::Voider:
      out << "  -- Contract (voider): always ready; accepted packets are\n"
             "  -- discarded and never propagate.\n";
      break;
    case IntrinsicKind::None:
      out << "  -- Contract: per-port valid/ready handshake; data, last and\n"
             "  -- tag lines are stable while valid is high and ready is\n"
             "  -- low, and transfer on a cycle where both are high.\n";
      break;
  }
  if (!plans.empty()) {
    out << "  --\n";
    for (const auto& plan : plans)
      out << "  -- port " << plan.port->display() << " -> " << plan.base
          << "_*\n";
  }
  return out.str();
}

}  // namespace

std::string sanitize_vhdl_name(const std::string& raw) {
  std::string out;
  for (char c : raw) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      out.push_back(c);
    } else if (!out.empty() && out.back() != '_') {
      out.push_back('_');
    }
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  if (out.empty() || std::isdigit(static_cast<unsigned char>(out[0])))
    out = "x" + out;
  if (vhdl_keywords().count(lowercased(out))) out += "_x";
  return out;
}

std::vector<VhdlFile> emit_vhdl(const ElaboratedDesign& design) {
  // Entity names first: impls in design order, deduped case-insensitively.
  NamePool entity_pool;
  for (const auto& kw : vhdl_keywords()) entity_pool.reserve(kw);
  std::map<std::string, std::string> entity_names;  // emit_name -> vhdl name
  for (const auto& impl : design.impls)
    entity_names[impl.emit_name] =
        entity_pool.claim(sanitize_vhdl_name(impl.emit_name));

  // Port plans are a function of the streamlet; share them.
  std::map<std::string, std::vector<PortPlan>> plans_by_streamlet;
  auto plans_of = [&](const ElaboratedStreamlet& s)
      -> const std::vector<PortPlan>& {
    auto it = plans_by_streamlet.find(s.emit_name);
    if (it == plans_by_streamlet.end())
      it = plans_by_streamlet.emplace(s.emit_name, plan_ports(s)).first;
    return it->second;
  };

  std::vector<VhdlFile> files;
  for (const auto& impl : design.impls) {
    const ElaboratedStreamlet& streamlet = design.streamlet_of(impl);
    const std::vector<PortPlan>& ports = plans_of(streamlet);
    const std::string& entity = entity_names.at(impl.emit_name);

    std::ostringstream out;
    out << "-- " << entity << ": generated from impl " << impl.emit_name
        << " of streamlet " << streamlet.emit_name << "\n";
    out << "library ieee;\n";
    out << "use ieee.std_logic_1164.all;\n\n";
    out << "entity " << entity << " is\n";
    emit_port_clause(out, ports, design, "  ", true);
    out << "end entity " << entity << ";\n\n";

    if (impl.external) {
      out << "architecture external_shell of " << entity << " is\n";
      out << contract_comment(impl, ports);
      out << "begin\n";
      out << "end architecture external_shell;\n";
      files.push_back({entity + ".vhd", out.str()});
      continue;
    }

    // Structural body. Names local to the architecture must not clash with
    // the entity's ports or with referenced component names.
    NamePool local;
    for (const auto& kw : vhdl_keywords()) local.reserve(kw);
    for (const auto& plan : ports)
      for (const auto& sig : plan.signals) local.reserve(sig.name);

    std::vector<std::string> used_components;
    std::set<std::string> seen_components;
    for (const auto& inst : impl.instances) {
      const auto& name = entity_names.at(design.find_impl(inst.impl)->emit_name);
      if (seen_components.insert(name).second) {
        used_components.push_back(design.find_impl(inst.impl)->emit_name);
        local.reserve(name);
      }
    }

    // One signal bundle per connection, named after its index.
    struct Net {
      std::string base;
      std::vector<PhysicalSignal> signals;
    };
    std::vector<Net> nets;
    std::map<std::string, size_t> net_of_slot;
    for (size_t i = 0; i < impl.connections.size(); ++i) {
      const auto& conn = impl.connections[i];
      const ElaboratedPort* src = resolve_endpoint(design, impl, conn.src);
      Net net;
      net.base = local.claim("n" + std::to_string(i), signal_suffixes());
      net.signals = physical_signals(*src, net.base);
      net_of_slot[conn.src.slot_key()] = i;
      net_of_slot[conn.dst.slot_key()] = i;
      nets.push_back(std::move(net));
    }

    std::map<std::string, std::string> instance_labels;
    for (const auto& inst : impl.instances)
      instance_labels[inst.display()] =
          local.claim(sanitize_vhdl_name(inst.display()));

    out << "architecture structural of " << entity << " is\n";
    for (const auto& emit_name : used_components) {
      const ElaboratedImpl* child = design.find_impl_by_name(emit_name);
      out << "  component " << entity_names.at(emit_name) << " is\n";
      emit_port_clause(out, plans_of(design.streamlet_of(*child)), design,
                       "    ", false);
      out << "  end component;\n";
    }
    for (const auto& net : nets)
      for (const auto& sig : net.signals)
        out << "  signal " << sig.name << " : "
            << (sig.width == 0 ? "std_logic"
                               : "std_logic_vector" + range_of(sig.width))
            << ";\n";
    out << "begin\n";

    // Component instantiations: every port of every instance is wired to
    // the net of its single connection (the usage rule guarantees one).
    for (const auto& inst : impl.instances) {
      const ElaboratedImpl* child = design.find_impl(inst.impl);
      const ElaboratedStreamlet& child_streamlet = design.streamlet_of(*child);
      const auto& child_ports = plans_of(child_streamlet);
      std::vector<std::string> mappings;
      for (const auto& plan : child_ports) {
        Endpoint slot;
        slot.self = false;
        slot.instance = inst.name;
        slot.instance_index = inst.index;
        slot.port = plan.port->name;
        slot.port_index = plan.port->index;
        auto it = net_of_slot.find(slot.slot_key());
        if (it == net_of_slot.end()) continue;  // DRC rejects unwired ports
        const Net& net = nets[it->second];
        for (size_t k = 0; k < plan.signals.size(); ++k)
          mappings.push_back("      " + plan.signals[k].name + " => " +
                             net.signals[k].name);
      }
      out << "  " << instance_labels.at(inst.display()) << " : "
          << entity_names.at(child->emit_name);
      if (mappings.empty()) {
        out << ";\n";
        continue;
      }
      out << "\n    port map (\n";
      for (size_t k = 0; k < mappings.size(); ++k)
        out << mappings[k] << (k + 1 == mappings.size() ? "\n" : ",\n");
      out << "    );\n";
    }

    // The impl's own ports attach to their nets with plain assignments.
    for (const auto& plan : ports) {
      Endpoint slot;
      slot.self = true;
      slot.port = plan.port->name;
      slot.port_index = plan.port->index;
      auto it = net_of_slot.find(slot.slot_key());
      if (it == net_of_slot.end()) continue;
      const Net& net = nets[it->second];
      bool is_source = plan.port->direction == PortDirection::In;
      for (size_t k = 0; k < plan.signals.size(); ++k) {
        const auto& port_sig = plan.signals[k];
        const auto& net_sig = net.signals[k];
        bool net_driven =
            (port_sig.role == PhysicalSignal::Role::Ready) != is_source;
        if (net_driven)
          out << "  " << net_sig.name << " <= " << port_sig.name << ";\n";
        else
          out << "  " << port_sig.name << " <= " << net_sig.name << ";\n";
      }
    }

    out << "end architecture structural;\n";
    files.push_back({entity + ".vhd", out.str()});
  }
  return files;
}

}  // namespace tydic
