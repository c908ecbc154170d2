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

#include "tydic/drc.hpp"

#include <map>

#include "tydic/elaborate.hpp"

namespace tydic {

namespace {

bool is_local_source(const Endpoint& ep, const ElaboratedPort& port) {
  // Inside an impl body, the impl's own `in` port produces data and an
  // instance's `out` port produces data.
  return ep.self ? port.direction == PortDirection::In
                 : port.direction == PortDirection::Out;
}

bool is_local_sink(const Endpoint& ep, const ElaboratedPort& port) {
  return ep.self ? port.direction == PortDirection::Out
                 : port.direction == PortDirection::In;
}

const StreamType& stream_of(const ElaboratedPort& port) {
  return std::get<StreamType>(port.stream->resolved().node);
}

}  // namespace

DiagnosticList check_connection(const ElaboratedDesign& design,
                                const ElaboratedImpl& impl,
                                const ElaboratedConnection& conn,
                                DrcMode mode) {
  DiagnosticList diags;
  const ElaboratedPort* src = resolve_endpoint(design, impl, conn.src);
  const ElaboratedPort* dst = resolve_endpoint(design, impl, conn.dst);
  if (src == nullptr || dst == nullptr) {
    diags.error("E002", "connection endpoint does not resolve (internal)",
                conn.span);
    return diags;
  }

  // 1. Type equality under the selected mode.
  bool relax = conn.relax || mode == DrcMode::Hierarchy;
  bool types_ok = relax ? hierarchy_eq(*src->stream, *dst->stream)
                        : strict_eq(*src->stream, *dst->stream);
  if (!types_ok) {
    diags.error("E003",
                "connected ports have different logical types: " +
                    type_to_string(*src->stream) + " vs " +
                    type_to_string(*dst->stream) +
                    (relax ? "" : " (strict equality; @NoStrictType relaxes "
                                  "to hierarchy equality)"),
                conn.span);
    return diags;
  }

  // 2. Direction: source feeds sink, and only Forward streams carry the
  // source/sink roles this check understands.
  const StreamType& src_stream = stream_of(*src);
  const StreamType& dst_stream = stream_of(*dst);
  if (src_stream.direction == StreamDir::Reverse ||
      dst_stream.direction == StreamDir::Reverse) {
    diags.error("E003", "unsupported reverse stream in connection", conn.span);
    return diags;
  }
  if (!is_local_source(conn.src, *src)) {
    diags.error("E003",
                "'" + conn.src.display() + "' is not a data source here",
                conn.span);
    return diags;
  }
  if (!is_local_sink(conn.dst, *dst)) {
    diags.error("E003",
                "'" + conn.dst.display() + "' is not a data sink here",
                conn.span);
    return diags;
  }

  // 3. Clock domains must match exactly.
  if (src->clock_domain != dst->clock_domain) {
    diags.error("E005",
                "clock domain mismatch: '" + src->clock_domain + "' vs '" +
                    dst->clock_domain + "'",
                conn.span);
    return diags;
  }

  // 4. Protocol complexity.
  if (!complexity_compatible(src_stream, dst_stream)) {
    diags.error("E006",
                "complexity " + std::to_string(src_stream.complexity) +
                    " source cannot feed complexity " +
                    std::to_string(dst_stream.complexity) + " sink",
                conn.span);
    return diags;
  }
  return diags;
}

DiagnosticList check_port_usage(const ElaboratedDesign& design,
                                const ElaboratedImpl& impl) {
  DiagnosticList diags;
  if (impl.external) return diags;  // no body; ports count at use sites

  std::map<std::string, int> uses;
  for (const auto& conn : impl.connections) {
    ++uses[conn.src.slot_key()];
    ++uses[conn.dst.slot_key()];
  }

  auto check_slot = [&](const Endpoint& ep, SourceSpan span) {
    auto it = uses.find(ep.slot_key());
    int n = it == uses.end() ? 0 : it->second;
    if (n != 1)
      diags.error("E004",
                  "port '" + ep.display() + "' is used " + std::to_string(n) +
                      " times; each port must be used exactly once",
                  span);
  };

  const ElaboratedStreamlet* self = design.find_streamlet(impl.streamlet);
  if (self != nullptr) {
    for (const auto& p : self->ports) {
      Endpoint ep;
      ep.self = true;
      ep.port = p.name;
      ep.port_index = p.index;
      check_slot(ep, p.span);
    }
  }
  for (const auto& inst : impl.instances) {
    const ElaboratedImpl* child = design.find_impl(inst.impl);
    if (child == nullptr) continue;
    const ElaboratedStreamlet* s = design.find_streamlet(child->streamlet);
    if (s == nullptr) continue;
    for (const auto& p : s->ports) {
      Endpoint ep;
      ep.self = false;
      ep.instance = inst.name;
      ep.instance_index = inst.index;
      ep.port = p.name;
      ep.port_index = p.index;
      check_slot(ep, inst.span);
    }
  }
  return diags;
}

DiagnosticList run_drc(const ElaboratedDesign& design, DrcMode mode) {
  DiagnosticList diags;
  for (const auto& impl : design.impls) {
    if (impl.external) continue;
    for (const auto& conn : impl.connections)
      diags.append(check_connection(design, impl, conn, mode));
    diags.append(check_port_usage(design, impl));
  }
  diags.sort();
  return diags;
}

}  // namespace tydic
