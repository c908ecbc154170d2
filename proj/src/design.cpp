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

#include "tydic/design.hpp"

#include <algorithm>
#include <functional>

namespace tydic {

std::string Endpoint::display() const {
  std::string out = self ? "self" : instance;
  if (instance_index) out += "[" + std::to_string(*instance_index) + "]";
  out += "." + port;
  if (port_index) out += "[" + std::to_string(*port_index) + "]";
  return out;
}

std::string Endpoint::slot_key() const { return display(); }

const ElaboratedStreamlet* ElaboratedDesign::find_streamlet(
    const TypeIdentity& id) const {
  for (const auto& s : streamlets)
    if (s.identity == id) return &s;
  return nullptr;
}

const ElaboratedStreamlet* ElaboratedDesign::find_streamlet_by_name(
    const std::string& emit_name) const {
  for (const auto& s : streamlets)
    if (s.emit_name == emit_name) return &s;
  return nullptr;
}

ElaboratedImpl* ElaboratedDesign::find_impl(const TypeIdentity& id) {
  for (auto& i : impls)
    if (i.identity == id) return &i;
  return nullptr;
}

const ElaboratedImpl* ElaboratedDesign::find_impl(const TypeIdentity& id) const {
  for (const auto& i : impls)
    if (i.identity == id) return &i;
  return nullptr;
}

const ElaboratedImpl* ElaboratedDesign::find_impl_by_name(
    const std::string& emit_name) const {
  for (const auto& i : impls)
    if (i.emit_name == emit_name) return &i;
  return nullptr;
}

const NamedTypeDecl* ElaboratedDesign::find_type(const TypeIdentity& id) const {
  for (const auto& t : types)
    if (t.id == id) return &t;
  return nullptr;
}

const ElaboratedStreamlet& ElaboratedDesign::streamlet_of(
    const ElaboratedImpl& impl) const {
  const auto* s = find_streamlet(impl.streamlet);
  if (s == nullptr)
    fail("E002", "impl references unknown streamlet (internal)", impl.span);
  return *s;
}

namespace {

struct NamedNode {
  NamedTypeDecl::Kind kind;
  LogicalTypeRef type;  // node carrying the identity
};

/// Collects every named type reachable from `t` into `out`.
void collect_named(const LogicalTypeRef& t,
                   std::map<TypeIdentity, NamedNode>& out) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, GroupType> ||
                      std::is_same_v<T, UnionType>) {
          auto kind = std::is_same_v<T, GroupType> ? NamedTypeDecl::Kind::Group
                                                   : NamedTypeDecl::Kind::Union;
          if (out.emplace(node.id, NamedNode{kind, t}).second)
            for (const auto& [name, child] : node.fields)
              collect_named(child, out);
        } else if constexpr (std::is_same_v<T, AliasType>) {
          if (out.emplace(node.id, NamedNode{NamedTypeDecl::Kind::Alias, t})
                  .second)
            collect_named(node.referent, out);
        } else if constexpr (std::is_same_v<T, StreamType>) {
          collect_named(node.element, out);
        }
      },
      t->node);
}

/// Nesting depth of a named type: named children count, anonymous wrappers
/// are free. Drives the dependencies-first section order.
int64_t type_level(const LogicalTypeRef& t,
                   std::map<TypeIdentity, int64_t>& memo);

int64_t children_level(const LogicalTypeRef& t,
                       std::map<TypeIdentity, int64_t>& memo) {
  return std::visit(
      [&](const auto& node) -> int64_t {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, GroupType> ||
                      std::is_same_v<T, UnionType>) {
          int64_t level = 0;
          for (const auto& [name, child] : node.fields)
            level = std::max(level, type_level(child, memo));
          return level;
        } else if constexpr (std::is_same_v<T, AliasType>) {
          return type_level(node.referent, memo);
        } else if constexpr (std::is_same_v<T, StreamType>) {
          return type_level(node.element, memo);
        } else {
          return 0;
        }
      },
      t->node);
}

int64_t type_level(const LogicalTypeRef& t,
                   std::map<TypeIdentity, int64_t>& memo) {
  const TypeIdentity* id = nullptr;
  if (const auto* g = std::get_if<GroupType>(&t->node)) id = &g->id;
  else if (const auto* u = std::get_if<UnionType>(&t->node)) id = &u->id;
  else if (const auto* a = std::get_if<AliasType>(&t->node)) id = &a->id;
  if (id == nullptr) return children_level(t, memo);
  auto it = memo.find(*id);
  if (it != memo.end()) return it->second;
  memo[*id] = 0;  // cycle guard; evaluated types are acyclic anyway
  int64_t level = 1 + children_level(t, memo);
  memo[*id] = level;
  return level;
}

std::string unique_name(std::map<std::string, int>& used,
                        const std::string& base) {
  auto [it, fresh] = used.emplace(base, 1);
  if (fresh) return base;
  std::string name;
  do {
    ++it->second;
    name = base + "_" + std::to_string(it->second);
  } while (used.count(name));
  used.emplace(name, 1);
  return name;
}

}  // namespace

void finalize_design(ElaboratedDesign& design) {
  // Named types reachable from any port.
  std::map<TypeIdentity, NamedNode> named;
  for (const auto& s : design.streamlets)
    for (const auto& p : s.ports) collect_named(p.stream, named);

  std::map<TypeIdentity, int64_t> levels;
  for (const auto& [id, node] : named) type_level(node.type, levels);

  std::vector<std::pair<TypeIdentity, NamedNode>> ordered(named.begin(),
                                                          named.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [&](const auto& a, const auto& b) {
                     int64_t la = levels[a.first];
                     int64_t lb = levels[b.first];
                     if (la != lb) return la < lb;
                     return a.first.mangled() < b.first.mangled();
                   });

  std::map<std::string, int> used;
  design.types.clear();
  for (auto& [id, node] : ordered) {
    NamedTypeDecl decl;
    decl.kind = node.kind;
    decl.id = id;
    if (node.kind == NamedTypeDecl::Kind::Alias)
      decl.type = std::get<AliasType>(node.type->node).referent;
    else
      decl.type = node.type;
    decl.emit_name = unique_name(used, id.mangled());
    design.types.push_back(std::move(decl));
  }

  // Streamlets: flat, lexicographic.
  std::stable_sort(design.streamlets.begin(), design.streamlets.end(),
                   [](const auto& a, const auto& b) {
                     if (a.identity.mangled() != b.identity.mangled())
                       return a.identity.mangled() < b.identity.mangled();
                     return a.identity < b.identity;
                   });
  for (auto& s : design.streamlets)
    s.emit_name = unique_name(used, s.identity.mangled());

  // Impls: instanced impls come before their parents.
  std::map<std::string, int64_t> impl_levels;  // keyed by canonical identity
  auto impl_key = [](const TypeIdentity& id) {
    std::string key = id.file + "#" + id.name;
    for (const auto& a : id.args) key += "#" + a;
    return key;
  };
  std::function<int64_t(const ElaboratedImpl&)> impl_level =
      [&](const ElaboratedImpl& impl) -> int64_t {
    auto it = impl_levels.find(impl_key(impl.identity));
    if (it != impl_levels.end()) return it->second;
    impl_levels[impl_key(impl.identity)] = 0;
    int64_t level = 0;
    for (const auto& inst : impl.instances) {
      const auto* child = design.find_impl(inst.impl);
      if (child != nullptr) level = std::max(level, 1 + impl_level(*child));
    }
    impl_levels[impl_key(impl.identity)] = level;
    return level;
  };
  for (auto& i : design.impls) impl_level(i);
  std::stable_sort(design.impls.begin(), design.impls.end(),
                   [&](const auto& a, const auto& b) {
                     int64_t la = impl_levels[impl_key(a.identity)];
                     int64_t lb = impl_levels[impl_key(b.identity)];
                     if (la != lb) return la < lb;
                     if (a.identity.mangled() != b.identity.mangled())
                       return a.identity.mangled() < b.identity.mangled();
                     return a.identity < b.identity;
                   });
  for (auto& i : design.impls)
    i.emit_name = unique_name(used, i.identity.mangled());
}

std::string print_type_ref(const LogicalType& t,
                           const ElaboratedDesign& design) {
  return std::visit(
      [&](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, NullType>) {
          return "Null";
        } else if constexpr (std::is_same_v<T, BitType>) {
          return "Bit(" + std::to_string(node.width) + ")";
        } else if constexpr (std::is_same_v<T, StreamType>) {
          std::string out = "Stream(" + print_type_ref(*node.element, design);
          out += ", d=" + std::to_string(node.dimension);
          out += ", r=";
          out += node.direction == StreamDir::Forward ? "Forward" : "Reverse";
          out += ", t=" + double_to_string(node.throughput);
          out += ", c=" + std::to_string(node.complexity);
          out += ", s=\"";
          switch (node.synchronicity) {
            case Synchronicity::Sync: out += "Sync"; break;
            case Synchronicity::Flatten: out += "Flatten"; break;
            case Synchronicity::Desync: out += "Desync"; break;
            case Synchronicity::FlatDesync: out += "FlatDesync"; break;
          }
          out += "\")";
          return out;
        } else {
          const auto* decl = design.find_type(node.id);
          return decl != nullptr ? decl->emit_name : node.id.mangled();
        }
      },
      t.node);
}

namespace {

bool type_equal_by_name(const LogicalType& a, const ElaboratedDesign& da,
                        const LogicalType& b, const ElaboratedDesign& db) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& na) -> bool {
        using T = std::decay_t<decltype(na)>;
        const auto& nb = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, NullType>) {
          return true;
        } else if constexpr (std::is_same_v<T, BitType>) {
          return na.width == nb.width;
        } else if constexpr (std::is_same_v<T, StreamType>) {
          return na.dimension == nb.dimension && na.direction == nb.direction &&
                 na.throughput == nb.throughput &&
                 na.complexity == nb.complexity &&
                 na.synchronicity == nb.synchronicity &&
                 type_equal_by_name(*na.element, da, *nb.element, db);
        } else if constexpr (std::is_same_v<T, AliasType>) {
          const auto* ta = da.find_type(na.id);
          const auto* tb = db.find_type(nb.id);
          if (ta == nullptr || tb == nullptr || ta->emit_name != tb->emit_name)
            return false;
          return type_equal_by_name(*na.referent, da, *nb.referent, db);
        } else {
          const auto* ta = da.find_type(na.id);
          const auto* tb = db.find_type(nb.id);
          if (ta == nullptr || tb == nullptr || ta->emit_name != tb->emit_name)
            return false;
          if (na.fields.size() != nb.fields.size()) return false;
          for (size_t i = 0; i < na.fields.size(); ++i) {
            if (na.fields[i].first != nb.fields[i].first) return false;
            if (!type_equal_by_name(*na.fields[i].second, da,
                                    *nb.fields[i].second, db))
              return false;
          }
          return true;
        }
      },
      a.node);
}

}  // namespace

bool design_equal(const ElaboratedDesign& a, const ElaboratedDesign& b) {
  if (a.top != b.top) return false;
  if (a.types.size() != b.types.size() ||
      a.streamlets.size() != b.streamlets.size() ||
      a.impls.size() != b.impls.size())
    return false;
  for (size_t i = 0; i < a.types.size(); ++i) {
    const auto& ta = a.types[i];
    const auto& tb = b.types[i];
    if (ta.kind != tb.kind || ta.emit_name != tb.emit_name) return false;
    if (!type_equal_by_name(*ta.type, a, *tb.type, b)) return false;
  }
  for (size_t i = 0; i < a.streamlets.size(); ++i) {
    const auto& sa = a.streamlets[i];
    const auto& sb = b.streamlets[i];
    if (sa.emit_name != sb.emit_name) return false;
    if (sa.ports.size() != sb.ports.size()) return false;
    for (size_t j = 0; j < sa.ports.size(); ++j) {
      const auto& pa = sa.ports[j];
      const auto& pb = sb.ports[j];
      if (pa.name != pb.name || pa.index != pb.index ||
          pa.direction != pb.direction || pa.clock_domain != pb.clock_domain)
        return false;
      if (!type_equal_by_name(*pa.stream, a, *pb.stream, b)) return false;
    }
  }
  for (size_t i = 0; i < a.impls.size(); ++i) {
    const auto& ia = a.impls[i];
    const auto& ib = b.impls[i];
    if (ia.emit_name != ib.emit_name || ia.external != ib.external ||
        ia.intrinsic != ib.intrinsic)
      return false;
    const auto* sa = a.find_streamlet(ia.streamlet);
    const auto* sb = b.find_streamlet(ib.streamlet);
    if (sa == nullptr || sb == nullptr || sa->emit_name != sb->emit_name)
      return false;
    if (ia.instances.size() != ib.instances.size()) return false;
    for (size_t j = 0; j < ia.instances.size(); ++j) {
      const auto& xa = ia.instances[j];
      const auto& xb = ib.instances[j];
      if (xa.name != xb.name || xa.index != xb.index) return false;
      const auto* impl_a = a.find_impl(xa.impl);
      const auto* impl_b = b.find_impl(xb.impl);
      if (impl_a == nullptr || impl_b == nullptr ||
          impl_a->emit_name != impl_b->emit_name)
        return false;
    }
    if (ia.connections.size() != ib.connections.size()) return false;
    for (size_t j = 0; j < ia.connections.size(); ++j) {
      const auto& ca = ia.connections[j];
      const auto& cb = ib.connections[j];
      if (!ca.src.same_slot(cb.src) || !ca.dst.same_slot(cb.dst) ||
          ca.relax != cb.relax)
        return false;
    }
  }
  return true;
}

}  // namespace tydic
