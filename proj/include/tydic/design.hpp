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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tydic/logical_type.hpp"

namespace tydic {

/// A fully evaluated port: a concrete Stream type plus direction and clock
/// domain. Port arrays are expanded one entry per index.
struct ElaboratedPort {
  std::string name;
  std::optional<int64_t> index;
  PortDirection direction = PortDirection::In;
  LogicalTypeRef stream;
  std::string clock_domain;
  SourceSpan span;

  std::string display() const {
    return index ? name + "[" + std::to_string(*index) + "]" : name;
  }
};

struct ElaboratedStreamlet {
  TypeIdentity identity;
  std::string emit_name;  // unique across the design, assigned by finalize
  std::vector<ElaboratedPort> ports;
  SourceSpan span;

  const ElaboratedPort* find_port(const std::string& name,
                                  std::optional<int64_t> index) const {
    for (const auto& p : ports)
      if (p.name == name && p.index == index) return &p;
    return nullptr;
  }
  bool has_port_named(const std::string& name) const {
    for (const auto& p : ports)
      if (p.name == name) return true;
    return false;
  }
};

/// One side of a connection, fully resolved to concrete indices. `self`
/// endpoints name the enclosing impl's own ports.
struct Endpoint {
  bool self = true;
  std::string instance;
  std::optional<int64_t> instance_index;
  std::string port;
  std::optional<int64_t> port_index;
  SourceSpan span;

  std::string display() const;
  /// Stable key identifying the port slot this endpoint touches.
  std::string slot_key() const;

  bool same_slot(const Endpoint& o) const {
    return self == o.self && instance == o.instance &&
           instance_index == o.instance_index && port == o.port &&
           port_index == o.port_index;
  }
};

struct ElaboratedConnection {
  Endpoint src;
  Endpoint dst;
  bool relax = false;  // @NoStrictType: checked with hierarchy equality
  SourceSpan span;
};

struct ElaboratedInstance {
  std::string name;
  std::optional<int64_t> index;
  TypeIdentity impl;
  SourceSpan span;

  std::string display() const {
    return index ? name + "[" + std::to_string(*index) + "]" : name;
  }
};

enum class IntrinsicKind { None, Duplicator, Voider };

struct ElaboratedImpl {
  TypeIdentity identity;
  std::string emit_name;
  TypeIdentity streamlet;
  bool external = false;
  IntrinsicKind intrinsic = IntrinsicKind::None;
  std::vector<ElaboratedInstance> instances;
  std::vector<ElaboratedConnection> connections;
  SourceSpan span;
};

/// Named logical types reachable from the design's ports, dependencies
/// first. Aliases keep their referent; groups/unions carry themselves.
struct NamedTypeDecl {
  enum class Kind { Alias, Group, Union };
  Kind kind = Kind::Alias;
  std::string emit_name;
  TypeIdentity id;
  LogicalTypeRef type;  // Alias: referent; Group/Union: the type itself
};

struct ElaboratedDesign {
  std::vector<NamedTypeDecl> types;
  std::vector<ElaboratedStreamlet> streamlets;
  std::vector<ElaboratedImpl> impls;
  std::string top;  // emit_name of the designated top-level impl

  const ElaboratedStreamlet* find_streamlet(const TypeIdentity& id) const;
  const ElaboratedStreamlet* find_streamlet_by_name(
      const std::string& emit_name) const;
  ElaboratedImpl* find_impl(const TypeIdentity& id);
  const ElaboratedImpl* find_impl(const TypeIdentity& id) const;
  const ElaboratedImpl* find_impl_by_name(const std::string& emit_name) const;
  const NamedTypeDecl* find_type(const TypeIdentity& id) const;

  const ElaboratedStreamlet& streamlet_of(const ElaboratedImpl& impl) const;
};

/// Assigns unique emit names and puts types/streamlets/impls into the
/// canonical order (dependencies first, lexicographic within a level).
/// Deterministic: a pure function of the design contents.
void finalize_design(ElaboratedDesign& design);

/// Prints a type reference the way the emitters spell it: named types by
/// emit name, Bit/Null/Stream structurally.
std::string print_type_ref(const LogicalType& t, const ElaboratedDesign& design);

/// Structural equality over finalized designs: emit names, ports, types,
/// instance and connection lists (in order), flags and top designation.
bool design_equal(const ElaboratedDesign& a, const ElaboratedDesign& b);

}  // namespace tydic
