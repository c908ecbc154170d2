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

#include "tydic/sugar.hpp"

#include <map>
#include <set>

namespace tydic {

namespace {

std::string slot_name(const Endpoint& ep) {
  std::string out = ep.self ? "self" : ep.instance;
  if (ep.instance_index) out += "_" + std::to_string(*ep.instance_index);
  out += "_" + ep.port;
  if (ep.port_index) out += "_" + std::to_string(*ep.port_index);
  return out;
}

std::string fresh_instance_name(const ElaboratedImpl& impl,
                                const std::string& base) {
  std::set<std::string> taken;
  for (const auto& inst : impl.instances) taken.insert(inst.name);
  if (!taken.count(base)) return base;
  int n = 2;
  while (taken.count(base + "_" + std::to_string(n))) ++n;
  return base + "_" + std::to_string(n);
}

Endpoint instance_port(const std::string& instance, const std::string& port,
                       std::optional<int64_t> port_index, SourceSpan span) {
  Endpoint ep;
  ep.self = false;
  ep.instance = instance;
  ep.port = port;
  ep.port_index = port_index;
  ep.span = span;
  return ep;
}

/// Local source slots in deterministic order: the impl's own in-ports in
/// declaration order, then each instance's out-ports.
std::vector<Endpoint> source_slots(const ElaboratedDesign& design,
                                   const ElaboratedImpl& impl) {
  std::vector<Endpoint> out;
  const ElaboratedStreamlet* self = design.find_streamlet(impl.streamlet);
  if (self != nullptr) {
    for (const auto& p : self->ports) {
      if (p.direction != PortDirection::In) continue;
      Endpoint ep;
      ep.self = true;
      ep.port = p.name;
      ep.port_index = p.index;
      ep.span = p.span;
      out.push_back(std::move(ep));
    }
  }
  for (const auto& inst : impl.instances) {
    const ElaboratedImpl* child = design.find_impl(inst.impl);
    if (child == nullptr) continue;
    const ElaboratedStreamlet* s = design.find_streamlet(child->streamlet);
    if (s == nullptr) continue;
    for (const auto& p : s->ports) {
      if (p.direction != PortDirection::Out) continue;
      Endpoint ep;
      ep.self = false;
      ep.instance = inst.name;
      ep.instance_index = inst.index;
      ep.port = p.name;
      ep.port_index = p.index;
      ep.span = inst.span;
      out.push_back(std::move(ep));
    }
  }
  return out;
}

}  // namespace

void insert_duplicators(Elaborator& elab, ElaboratedImpl& impl) {
  ElaboratedDesign& design = elab.working_design();
  if (impl.external) return;
  // instantiate_builtin can grow design.impls and invalidate `impl`; work on
  // a snapshot and re-acquire the live impl for the rewrite.
  const ElaboratedImpl snapshot = impl;
  const TypeIdentity impl_id = snapshot.identity;

  // Fan-out groups keyed by source slot, in first-appearance order.
  std::vector<std::pair<std::string, std::vector<size_t>>> groups;
  std::map<std::string, size_t> index_of;
  for (size_t i = 0; i < snapshot.connections.size(); ++i) {
    const std::string key = snapshot.connections[i].src.slot_key();
    auto it = index_of.find(key);
    if (it == index_of.end()) {
      index_of.emplace(key, groups.size());
      groups.push_back({key, {i}});
    } else {
      groups[it->second].second.push_back(i);
    }
  }

  struct Plan {
    std::vector<size_t> members;
    Endpoint src;
    std::string inst_name;
    TypeIdentity dup;
  };
  std::vector<Plan> plans;
  for (auto& [key, members] : groups) {
    if (members.size() < 2) continue;
    Plan plan;
    plan.members = members;
    plan.src = snapshot.connections[members[0]].src;
    const ElaboratedPort* port = resolve_endpoint(design, snapshot, plan.src);
    if (port == nullptr) continue;  // dangling endpoints belong to DRC
    plan.inst_name =
        fresh_instance_name(snapshot, "__dup_" + slot_name(plan.src));
    SourceSpan span = snapshot.connections[members[0]].span;
    plan.dup = elab.instantiate_builtin(
        "duplicator_i",
        {TemplateArgValue::of(port->stream),
         TemplateArgValue::of(
             Value::integer(BigInt(static_cast<int64_t>(members.size())))),
         TemplateArgValue::of(Value::clock(port->clock_domain))},
        span);
    plans.push_back(std::move(plan));
  }
  if (plans.empty()) return;

  ElaboratedImpl& target = *design.find_impl(impl_id);
  std::map<size_t, std::pair<size_t, size_t>> member_to_plan;  // conn -> (plan, j)
  for (size_t p = 0; p < plans.size(); ++p)
    for (size_t j = 0; j < plans[p].members.size(); ++j)
      member_to_plan[plans[p].members[j]] = {p, j};

  std::vector<ElaboratedConnection> rewired;
  rewired.reserve(target.connections.size() + plans.size());
  for (size_t i = 0; i < target.connections.size(); ++i) {
    auto it = member_to_plan.find(i);
    if (it == member_to_plan.end()) {
      rewired.push_back(std::move(target.connections[i]));
      continue;
    }
    const Plan& plan = plans[it->second.first];
    size_t j = it->second.second;
    SourceSpan span = target.connections[i].span;
    if (j == 0) {
      // Feed the duplicator where the first fan-out connection stood.
      ElaboratedConnection feed;
      feed.src = plan.src;
      feed.dst = instance_port(plan.inst_name, "input", std::nullopt, span);
      feed.span = span;
      rewired.push_back(std::move(feed));
    }
    ElaboratedConnection out;
    out.src = instance_port(plan.inst_name, "output",
                            static_cast<int64_t>(j), span);
    out.dst = target.connections[i].dst;
    out.relax = target.connections[i].relax;
    out.span = span;
    rewired.push_back(std::move(out));
  }
  target.connections = std::move(rewired);
  for (const Plan& plan : plans)
    target.instances.push_back(ElaboratedInstance{
        plan.inst_name, std::nullopt, plan.dup, target.span});
}

void insert_voiders(Elaborator& elab, ElaboratedImpl& impl) {
  ElaboratedDesign& design = elab.working_design();
  if (impl.external) return;
  const ElaboratedImpl snapshot = impl;  // see insert_duplicators
  const TypeIdentity impl_id = snapshot.identity;

  std::map<std::string, int> uses;
  for (const auto& conn : snapshot.connections) {
    ++uses[conn.src.slot_key()];
    ++uses[conn.dst.slot_key()];
  }

  struct Plan {
    Endpoint src;
    std::string inst_name;
    TypeIdentity voider;
  };
  std::vector<Plan> plans;
  for (const Endpoint& ep : source_slots(design, snapshot)) {
    if (uses.count(ep.slot_key())) continue;
    const ElaboratedPort* port = resolve_endpoint(design, snapshot, ep);
    if (port == nullptr) continue;
    Plan plan;
    plan.src = ep;
    plan.inst_name = fresh_instance_name(snapshot, "__void_" + slot_name(ep));
    plan.voider = elab.instantiate_builtin(
        "voider_i",
        {TemplateArgValue::of(port->stream),
         TemplateArgValue::of(Value::clock(port->clock_domain))},
        ep.span);
    plans.push_back(std::move(plan));
  }
  if (plans.empty()) return;

  ElaboratedImpl& target = *design.find_impl(impl_id);
  for (const Plan& plan : plans) {
    target.instances.push_back(ElaboratedInstance{
        plan.inst_name, std::nullopt, plan.voider, target.span});
    ElaboratedConnection conn;
    conn.src = plan.src;
    conn.dst = instance_port(plan.inst_name, "input", std::nullopt,
                             plan.src.span);
    conn.span = plan.src.span;
    target.connections.push_back(std::move(conn));
  }
}

void apply_sugaring(Elaborator& elab) {
  ElaboratedDesign& design = elab.working_design();
  // Duplicators first: voiding decisions must see the final fan-outs. The
  // impls appended by instantiation are external shells, which both passes
  // skip.
  for (size_t i = 0; i < design.impls.size(); ++i)
    insert_duplicators(elab, design.impls[i]);
  for (size_t i = 0; i < design.impls.size(); ++i)
    insert_voiders(elab, design.impls[i]);
}

}  // namespace tydic
