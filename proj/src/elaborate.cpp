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

#include "tydic/elaborate.hpp"

#include <map>
#include <set>

#include "tydic/eval.hpp"

namespace tydic {

std::string TemplateArgValue::canonical() const {
  switch (kind) {
    case Kind::Value: {
      const char* tag = "v";
      switch (value.kind()) {
        case ValueKind::Int: tag = "i"; break;
        case ValueKind::Float: tag = "f"; break;
        case ValueKind::String: tag = "s"; break;
        case ValueKind::Bool: tag = "b"; break;
        case ValueKind::ClockDomain: tag = "c"; break;
      }
      std::string prefix = value.is_array() ? std::string("a") + tag : tag;
      return prefix + ":" + value.to_string();
    }
    case Kind::Type:
      return "t:" + type_key(*type);
    case Kind::Impl: {
      std::string out = "m:" + impl.file + "#" + impl.name;
      for (const auto& a : impl.args) out += "#" + a;
      return out;
    }
  }
  return "?";
}

std::string TemplateArgValue::display() const {
  switch (kind) {
    case Kind::Value: return value.mangle();
    case Kind::Type: return type_mangle(*type);
    case Kind::Impl: return impl.mangled();
  }
  return "?";
}

namespace {

std::string identity_key(const TypeIdentity& id) {
  std::string key = id.file + "#" + id.name;
  for (const auto& a : id.args) key += "#" + a;
  return key;
}

/// Per-impl bookkeeping for array-aware endpoint checks.
struct InstanceInfo {
  bool is_array = false;
  int64_t size = 0;  // entries when is_array
  TypeIdentity impl;
  SourceSpan span;
};

/// One for-loop iteration. Instances declared inside a loop body exist once
/// per iteration, so their names gain a unique iteration suffix; port
/// references in the same iteration resolve through the rename map.
struct LoopFrame {
  const LoopFrame* parent = nullptr;
  std::string suffix;
  std::map<std::string, std::string> renames;

  const std::string* find(const std::string& name) const {
    for (const LoopFrame* f = this; f != nullptr; f = f->parent) {
      auto it = f->renames.find(name);
      if (it != f->renames.end()) return &it->second;
    }
    return nullptr;
  }
};

}  // namespace

class Elaborator::Impl {
 public:
  Impl(const SourceManager& sm, ResolveResult& scopes, ElaborateOptions opts,
       ElaboratedDesign& design)
      : sm_(sm), scopes_(scopes), opts_(opts), design_(design) {}

  TypeIdentity instantiate_top(const std::string& top_name) {
    const Declaration* found = nullptr;
    Scope* found_scope = nullptr;
    for (auto& [file, scope] : scopes_.file_scopes) {
      ScopeEntry* entry = scope->lookup_local(top_name);
      if (entry == nullptr || entry->kind != ScopeEntry::Kind::Impl) continue;
      if (found != nullptr)
        fail("E002", "top impl '" + top_name + "' is defined in several files",
             entry->span);
      found = entry->decl;
      found_scope = entry->decl_scope;
    }
    if (found == nullptr)
      fail("E002", "top impl '" + top_name + "' not found", {});
    const auto& impl = std::get<ImplDecl>(found->node);
    if (!impl.params.empty())
      fail("E009", "top impl '" + top_name + "' must not be templated",
           found->span);
    return instantiate_impl(*found, *found_scope, {}, found->span);
  }

  TypeIdentity instantiate_builtin(const std::string& name,
                                   std::vector<TemplateArgValue> args,
                                   SourceSpan use_span) {
    ScopeEntry* entry = scopes_.builtin->lookup_local(name);
    if (entry == nullptr || entry->kind != ScopeEntry::Kind::Impl)
      fail("E002", "builtin impl '" + name + "' not found", use_span);
    return instantiate_impl(*entry->decl, *entry->decl_scope, std::move(args),
                            use_span);
  }

  // -- template instantiation -----------------------------------------------

  TypeIdentity make_identity(const Declaration& decl, Scope& decl_scope,
                             const std::vector<TemplateArgValue>& args) {
    TypeIdentity id;
    id.file = decl_scope.origin();
    id.name = decl.name;
    for (const auto& a : args) {
      id.args.push_back(a.canonical());
      id.display.push_back(a.display());
    }
    return id;
  }

  void check_args(const std::vector<TemplateParam>& params,
                  std::vector<TemplateArgValue>& args, Scope& decl_scope,
                  const std::string& decl_name, SourceSpan use_span) {
    if (params.size() != args.size())
      fail("E009",
           "'" + decl_name + "' expects " + std::to_string(params.size()) +
               " template argument(s), got " + std::to_string(args.size()),
           use_span);
    for (size_t i = 0; i < params.size(); ++i) {
      const TemplateParam& p = params[i];
      TemplateArgValue& a = args[i];
      switch (p.kind) {
        case TemplateParam::Kind::Value: {
          if (a.kind != TemplateArgValue::Kind::Value)
            fail("E009",
                 "template argument " + std::to_string(i + 1) + " of '" +
                     decl_name + "' must be a " +
                     value_kind_name(p.value_kind) + " value",
                 use_span);
          a.value = coerce_template_value(a.value, p.value_kind, decl_name,
                                          i + 1, use_span);
          break;
        }
        case TemplateParam::Kind::Type:
          if (a.kind != TemplateArgValue::Kind::Type)
            fail("E009",
                 "template argument " + std::to_string(i + 1) + " of '" +
                     decl_name + "' must be a type",
                 use_span);
          break;
        case TemplateParam::Kind::ImplOf: {
          if (a.kind != TemplateArgValue::Kind::Impl)
            fail("E009",
                 "template argument " + std::to_string(i + 1) + " of '" +
                     decl_name + "' must be an impl of '" + p.of_streamlet +
                     "'",
                 use_span);
          // Nominal check: the argument impl's streamlet declaration must be
          // the named one (any instantiation of it).
          ScopeEntry* want = decl_scope.lookup(p.of_streamlet);
          if (want == nullptr || want->kind != ScopeEntry::Kind::Streamlet)
            fail("E002", "unresolved streamlet '" + p.of_streamlet + "'",
                 p.span);
          const ElaboratedImpl* got = design_.find_impl(a.impl);
          if (got == nullptr)
            fail("E009", "impl argument is not elaborated (internal)",
                 use_span);
          if (got->streamlet.file != want->decl_scope->origin() ||
              got->streamlet.name != want->decl->name)
            fail("E009",
                 "impl '" + a.impl.mangled() + "' is not derived from '" +
                     p.of_streamlet + "'",
                 use_span);
          break;
        }
      }
    }
  }

  Value coerce_template_value(const Value& v, ValueKind kind,
                              const std::string& decl_name, size_t pos,
                              SourceSpan span) {
    switch (kind) {
      case ValueKind::Int:
        if (v.is_int()) return v;
        break;
      case ValueKind::Float:
        if (v.is_float()) return v;
        if (v.is_int()) return Value::real(v.as_int().to_double());
        break;
      case ValueKind::String:
        if (v.is_string()) return v;
        break;
      case ValueKind::Bool:
        if (v.is_bool()) return v;
        break;
      case ValueKind::ClockDomain:
        if (v.is_clock()) return v;
        if (v.is_string()) return Value::clock(v.as_string());
        break;
    }
    fail("E009",
         "template argument " + std::to_string(pos) + " of '" + decl_name +
             "' must be " + value_kind_name(kind) + ", got " + v.kind_name(),
         span);
  }

  Scope* bind_params(const std::vector<TemplateParam>& params,
                     const std::vector<TemplateArgValue>& args,
                     Scope* parent) {
    Scope* scope = new_scope(parent, parent->origin());
    for (size_t i = 0; i < params.size(); ++i) {
      ScopeEntry entry;
      entry.span = params[i].span;
      switch (args[i].kind) {
        case TemplateArgValue::Kind::Value:
          entry.kind = ScopeEntry::Kind::Value;
          entry.value = args[i].value;
          break;
        case TemplateArgValue::Kind::Type:
          entry.kind = ScopeEntry::Kind::Type;
          entry.type = args[i].type;
          break;
        case TemplateArgValue::Kind::Impl:
          entry.kind = ScopeEntry::Kind::ImplArg;
          entry.impl_id = args[i].impl;
          break;
      }
      if (!scope->define(params[i].name, std::move(entry)))
        fail("E008", "duplicate template parameter '" + params[i].name + "'",
             params[i].span);
    }
    return scope;
  }

  std::vector<TemplateArgValue> eval_template_args(
      const std::vector<TemplateArg>& args, Scope& scope) {
    std::vector<TemplateArgValue> out;
    for (const auto& a : args) {
      switch (a.kind) {
        case TemplateArg::Kind::Value:
          out.push_back(TemplateArgValue::of(eval(*a.value, scope)));
          break;
        case TemplateArg::Kind::Type:
          out.push_back(TemplateArgValue::of(eval_type(*a.type, scope)));
          break;
        case TemplateArg::Kind::Impl:
          out.push_back(TemplateArgValue::of(resolve_impl_arg(a.impl, scope,
                                                              a.span)));
          break;
      }
    }
    return out;
  }

  /// `impl X` template argument: X is either a concrete (non-templated) impl
  /// declaration, instantiated on the spot, or a forwarded impl parameter.
  TypeIdentity resolve_impl_arg(const std::string& name, Scope& scope,
                                SourceSpan span) {
    ScopeEntry* entry = scope.lookup(name);
    if (entry == nullptr)
      fail("E002", "unresolved impl name '" + name + "'", span);
    if (entry->kind == ScopeEntry::Kind::ImplArg) return entry->impl_id;
    if (entry->kind != ScopeEntry::Kind::Impl)
      fail("E009", "'" + name + "' is not an impl", span);
    const auto& decl = std::get<ImplDecl>(entry->decl->node);
    if (!decl.params.empty())
      fail("E009",
           "impl template argument '" + name +
               "' must be concrete (it is a template)",
           span);
    return instantiate_impl(*entry->decl, *entry->decl_scope, {}, span);
  }

  TypeIdentity instantiate_streamlet(const Declaration& decl, Scope& decl_scope,
                                     std::vector<TemplateArgValue> args,
                                     SourceSpan use_span) {
    const auto& streamlet = std::get<StreamletDecl>(decl.node);
    check_args(streamlet.params, args, decl_scope, decl.name, use_span);
    TypeIdentity id = make_identity(decl, decl_scope, args);
    if (streamlet_memo_.count(identity_key(id))) return id;
    guard_depth(use_span);

    Scope* scope = bind_params(streamlet.params, args, &decl_scope);
    ElaboratedStreamlet elaborated;
    elaborated.identity = id;
    elaborated.span = decl.span;
    for (const auto& port : streamlet.ports) {
      LogicalTypeRef type = eval_type(*port.type, *scope);
      if (!type->is_stream())
        fail("E011",
             "port '" + port.name + "' must have a Stream type, got " +
                 type_to_string(*type),
             port.span);
      std::string domain =
          eval_clock_domain(port.clock_domain, *scope, port.span);
      if (port.array_size) {
        Value n = eval(*port.array_size, *scope);
        if (!n.is_int())
          fail("E010", "port array size must be an integer", port.span);
        if (n.as_int().is_negative())
          fail("E010", "port array size must not be negative", port.span);
        if (!n.as_int().fits_int64() || n.as_int().to_int64() > (1 << 20))
          fail("E010", "port array size out of range", port.span);
        int64_t count = n.as_int().to_int64();
        for (int64_t i = 0; i < count; ++i)
          elaborated.ports.push_back(ElaboratedPort{
              port.name, i, port.dir, type, domain, port.span});
      } else {
        elaborated.ports.push_back(ElaboratedPort{
            port.name, std::nullopt, port.dir, type, domain, port.span});
      }
    }
    streamlet_memo_.insert(identity_key(id));
    design_.streamlets.push_back(std::move(elaborated));
    --depth_;
    return id;
  }

  TypeIdentity instantiate_impl(const Declaration& decl, Scope& decl_scope,
                                std::vector<TemplateArgValue> args,
                                SourceSpan use_span) {
    const auto& impl = std::get<ImplDecl>(decl.node);
    check_args(impl.params, args, decl_scope, decl.name, use_span);
    TypeIdentity id = make_identity(decl, decl_scope, args);
    if (impl_memo_.count(identity_key(id))) return id;
    guard_depth(use_span);

    Scope* scope = bind_params(impl.params, args, &decl_scope);

    // The `of` streamlet, with arguments evaluated in this impl's scope
    // (template argument forwarding).
    ScopeEntry* of_entry = scope->lookup(impl.of_name);
    if (of_entry == nullptr || of_entry->kind != ScopeEntry::Kind::Streamlet)
      fail("E002", "'" + impl.of_name + "' is not a streamlet", impl.of_span);
    TypeIdentity sid = instantiate_streamlet(
        *of_entry->decl, *of_entry->decl_scope,
        eval_template_args(impl.of_args, *scope), impl.of_span);

    ElaboratedImpl elaborated;
    elaborated.identity = id;
    elaborated.streamlet = sid;
    elaborated.external = impl.external;
    elaborated.span = decl.span;
    if (decl_scope.origin() == "<builtin>") {
      if (decl.name == "duplicator_i")
        elaborated.intrinsic = IntrinsicKind::Duplicator;
      else if (decl.name == "voider_i")
        elaborated.intrinsic = IntrinsicKind::Voider;
    }

    std::map<std::string, InstanceInfo> instances;
    int64_t loop_ordinal = 0;
    elaborate_items(impl.body, *scope, elaborated, instances, nullptr,
                    loop_ordinal);
    if (impl.external &&
        (!elaborated.instances.empty() || !elaborated.connections.empty()))
      fail("E009",
           "external impl '" + decl.name +
               "' cannot contain instances or connections",
           decl.span);
    validate_endpoints(elaborated, instances);

    impl_memo_.insert(identity_key(id));
    design_.impls.push_back(std::move(elaborated));
    --depth_;
    return id;
  }

  // -- impl body expansion ----------------------------------------------------

  void elaborate_items(const std::vector<ImplItem>& items, Scope& scope,
                       ElaboratedImpl& out,
                       std::map<std::string, InstanceInfo>& instances,
                       LoopFrame* frame, int64_t& loop_ordinal) {
    for (const auto& item : items) {
      std::visit(
          [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, InstanceDecl>) {
              elaborate_instance(node, item.span, scope, out, instances,
                                 frame);
            } else if constexpr (std::is_same_v<T, ConnectionItem>) {
              ElaboratedConnection conn;
              conn.src = make_endpoint(node.src, scope, frame);
              conn.dst = make_endpoint(node.dst, scope, frame);
              conn.relax = node.relax;
              conn.span = item.span;
              out.connections.push_back(std::move(conn));
            } else if constexpr (std::is_same_v<T, ForItem>) {
              Value iterable = eval(*node.iterable, scope);
              if (!iterable.is_array())
                fail("E010",
                     std::string("for loop needs an array, got ") +
                         iterable.kind_name(),
                     node.iterable->span);
              int64_t ordinal = loop_ordinal++;
              const auto& elems = iterable.as_array().elements;
              for (size_t k = 0; k < elems.size(); ++k) {
                Scope* inner = new_scope(&scope, scope.origin());
                ScopeEntry entry;
                entry.kind = ScopeEntry::Kind::Value;
                entry.value = elems[k];
                entry.span = item.span;
                inner->define(node.var, std::move(entry));
                LoopFrame iteration;
                iteration.parent = frame;
                iteration.suffix = (frame ? frame->suffix : "") + "__" +
                                   std::to_string(ordinal) + "_" +
                                   std::to_string(k);
                elaborate_items(node.body, *inner, out, instances, &iteration,
                                loop_ordinal);
              }
            } else if constexpr (std::is_same_v<T, IfItem>) {
              Value cond = eval(*node.cond, scope);
              if (!cond.is_bool())
                fail("E010",
                     std::string("if condition must be a boolean, got ") +
                         cond.kind_name(),
                     node.cond->span);
              if (cond.as_bool())
                elaborate_items(node.body, scope, out, instances, frame,
                                loop_ordinal);
            } else if constexpr (std::is_same_v<T, AssertItem>) {
              eval_assert(*node.cond, scope);
            }
          },
          item.node);
    }
  }

  void elaborate_instance(const InstanceDecl& decl, SourceSpan span,
                          Scope& scope, ElaboratedImpl& out,
                          std::map<std::string, InstanceInfo>& instances,
                          LoopFrame* frame) {
    if (decl.name == "self")
      fail("E008", "'self' is reserved and cannot name an instance", span);
    // An instance declared inside a for body exists once per iteration;
    // the iteration suffix keeps the expanded copies apart.
    std::string name = decl.name;
    if (frame != nullptr) {
      name += frame->suffix;
      frame->renames[decl.name] = name;
    }
    if (instances.count(name))
      fail("E008", "duplicate instance name '" + decl.name + "'", span);

    TypeIdentity impl_id;
    ScopeEntry* entry = scope.lookup(decl.impl_name);
    if (entry == nullptr)
      fail("E002", "unresolved impl name '" + decl.impl_name + "'",
           decl.impl_span);
    if (entry->kind == ScopeEntry::Kind::ImplArg) {
      if (!decl.args.empty())
        fail("E009",
             "'" + decl.impl_name +
                 "' is an impl parameter and takes no template arguments",
             decl.impl_span);
      impl_id = entry->impl_id;
    } else if (entry->kind == ScopeEntry::Kind::Impl) {
      impl_id = instantiate_impl(*entry->decl, *entry->decl_scope,
                                 eval_template_args(decl.args, scope),
                                 decl.impl_span);
    } else {
      fail("E002", "'" + decl.impl_name + "' is not an impl", decl.impl_span);
    }

    InstanceInfo info;
    info.impl = impl_id;
    info.span = span;
    if (decl.array_size) {
      Value n = eval(*decl.array_size, scope);
      if (!n.is_int())
        fail("E010", "instance array size must be an integer",
             decl.array_size->span);
      if (n.as_int().is_negative())
        fail("E010", "instance array size must not be negative",
             decl.array_size->span);
      if (!n.as_int().fits_int64() || n.as_int().to_int64() > (1 << 20))
        fail("E010", "instance array size out of range", decl.array_size->span);
      info.is_array = true;
      info.size = n.as_int().to_int64();
      for (int64_t i = 0; i < info.size; ++i)
        out.instances.push_back(ElaboratedInstance{name, i, impl_id, span});
    } else {
      out.instances.push_back(
          ElaboratedInstance{name, std::nullopt, impl_id, span});
    }
    instances.emplace(name, std::move(info));
  }

  Endpoint make_endpoint(const PortRef& ref, Scope& scope,
                         const LoopFrame* frame) {
    Endpoint ep;
    ep.span = ref.span;
    if (ref.instance) {
      ep.self = false;
      ep.instance = *ref.instance;
      if (frame != nullptr)
        if (const std::string* renamed = frame->find(*ref.instance))
          ep.instance = *renamed;
      if (ref.instance_index)
        ep.instance_index = eval_index(*ref.instance_index, scope);
    }
    ep.port = ref.port;
    if (ref.port_index) ep.port_index = eval_index(*ref.port_index, scope);
    return ep;
  }

  int64_t eval_index(const Expr& e, Scope& scope) {
    Value v = eval(e, scope);
    if (!v.is_int())
      fail("E010",
           std::string("index must be an integer, got ") + v.kind_name(),
           e.span);
    if (!v.as_int().fits_int64())
      fail("E002", "index out of bounds", e.span);
    return v.as_int().to_int64();
  }

  // -- endpoint validation ----------------------------------------------------

  void validate_endpoints(const ElaboratedImpl& impl,
                          const std::map<std::string, InstanceInfo>& instances) {
    const ElaboratedStreamlet* self = design_.find_streamlet(impl.streamlet);
    for (const auto& conn : impl.connections) {
      validate_endpoint(conn.src, *self, instances);
      validate_endpoint(conn.dst, *self, instances);
    }
  }

  void validate_endpoint(const Endpoint& ep,
                         const ElaboratedStreamlet& self,
                         const std::map<std::string, InstanceInfo>& instances) {
    const ElaboratedStreamlet* streamlet = &self;
    if (!ep.self) {
      auto it = instances.find(ep.instance);
      if (it == instances.end()) {
        // A bare `name` parses as a self port; if an instance port was
        // meant, the instance is simply missing.
        fail("E002", "no instance named '" + ep.instance + "' in this impl",
             ep.span);
      }
      const InstanceInfo& info = it->second;
      if (info.is_array) {
        if (!ep.instance_index)
          fail("E002",
               "instance '" + ep.instance + "' is an array; index required",
               ep.span);
        if (*ep.instance_index < 0 || *ep.instance_index >= info.size)
          fail("E002",
               "index " + std::to_string(*ep.instance_index) +
                   " out of bounds for instance array '" + ep.instance +
                   "' of size " + std::to_string(info.size),
               ep.span);
      } else if (ep.instance_index) {
        fail("E002", "instance '" + ep.instance + "' is not an array", ep.span);
      }
      const ElaboratedImpl* child = design_.find_impl(info.impl);
      streamlet = design_.find_streamlet(child->streamlet);
    } else if (ep.instance_index) {
      fail("E002", "port reference cannot index the enclosing impl", ep.span);
    }

    if (streamlet->find_port(ep.port, ep.port_index) != nullptr) return;
    if (!streamlet->has_port_named(ep.port))
      fail("E002",
           "no port named '" + ep.port + "' on " +
               (ep.self ? "this impl" : "instance '" + ep.instance + "'"),
           ep.span);
    if (!ep.port_index)
      fail("E002", "port '" + ep.port + "' is an array; index required",
           ep.span);
    // Named port exists but (name, index) does not: either not an array or
    // out of range.
    if (streamlet->find_port(ep.port, std::nullopt) != nullptr)
      fail("E002", "port '" + ep.port + "' is not an array", ep.span);
    fail("E002",
         "index " + std::to_string(*ep.port_index) +
             " out of bounds for port array '" + ep.port + "'",
         ep.span);
  }

  // -- plumbing ---------------------------------------------------------------

  Scope* new_scope(Scope* parent, std::string origin) {
    arena_.push_back(std::make_unique<Scope>(parent, std::move(origin)));
    return arena_.back().get();
  }

  void guard_depth(SourceSpan span) {
    if (++depth_ > opts_.template_depth)
      fail("E009",
           "template recursion depth exceeds " +
               std::to_string(opts_.template_depth),
           span);
  }

  const SourceManager& sm_;
  ResolveResult& scopes_;
  ElaborateOptions opts_;
  ElaboratedDesign& design_;
  std::vector<std::unique_ptr<Scope>> arena_;
  std::set<std::string> impl_memo_;
  std::set<std::string> streamlet_memo_;
  int64_t depth_ = 0;
};

Elaborator::Elaborator(const SourceManager& sm, ResolveResult& scopes,
                       ElaborateOptions opts)
    : impl_(std::make_unique<Impl>(sm, scopes, opts, design_)) {}

Elaborator::~Elaborator() = default;

TypeIdentity Elaborator::instantiate_top(const std::string& top_name) {
  return impl_->instantiate_top(top_name);
}

TypeIdentity Elaborator::instantiate_impl_decl(
    const Declaration& decl, Scope& decl_scope,
    std::vector<TemplateArgValue> args, SourceSpan use_span) {
  return impl_->instantiate_impl(decl, decl_scope, std::move(args), use_span);
}

TypeIdentity Elaborator::instantiate_builtin(const std::string& name,
                                             std::vector<TemplateArgValue> args,
                                             SourceSpan use_span) {
  return impl_->instantiate_builtin(name, std::move(args), use_span);
}

ElaboratedDesign Elaborator::finish(const TypeIdentity& top) {
  validate_elaborated(design_);
  finalize_design(design_);
  const ElaboratedImpl* impl = design_.find_impl(top);
  design_.top = impl != nullptr ? impl->emit_name : top.mangled();
  return std::move(design_);
}

ElaborateResult elaborate(const SourceManager& sm, ResolveResult& scopes,
                          const std::string& top_name, ElaborateOptions opts) {
  ElaborateResult result;
  try {
    Elaborator elab(sm, scopes, opts);
    TypeIdentity top = elab.instantiate_top(top_name);
    result.design = elab.finish(top);
    result.ok = true;
  } catch (const CompileError& err) {
    result.diagnostics.add(err.diag());
  }
  return result;
}

void validate_elaborated(const ElaboratedDesign& design) {
  for (const auto& streamlet : design.streamlets)
    for (const auto& port : streamlet.ports) {
      if (!port.stream || !port.stream->is_stream())
        throw std::logic_error("unevaluated port survived elaboration: " +
                               streamlet.identity.mangled() + "." +
                               port.display());
      if (port.clock_domain.empty())
        throw std::logic_error("port without clock domain: " + port.display());
    }
  for (const auto& impl : design.impls) {
    if (design.find_streamlet(impl.streamlet) == nullptr)
      throw std::logic_error("impl without streamlet: " +
                             impl.identity.mangled());
    for (const auto& inst : impl.instances)
      if (design.find_impl(inst.impl) == nullptr)
        throw std::logic_error("dangling instance: " + inst.display());
    for (const auto& conn : impl.connections) {
      if (resolve_endpoint(design, impl, conn.src) == nullptr ||
          resolve_endpoint(design, impl, conn.dst) == nullptr)
        throw std::logic_error("dangling endpoint in " +
                               impl.identity.mangled() + ": " +
                               conn.src.display() + " => " +
                               conn.dst.display());
    }
  }
}

const ElaboratedPort* resolve_endpoint(const ElaboratedDesign& design,
                                       const ElaboratedImpl& impl,
                                       const Endpoint& ep) {
  const ElaboratedStreamlet* streamlet = nullptr;
  if (ep.self) {
    streamlet = design.find_streamlet(impl.streamlet);
  } else {
    for (const auto& inst : impl.instances) {
      if (inst.name == ep.instance && inst.index == ep.instance_index) {
        const ElaboratedImpl* child = design.find_impl(inst.impl);
        if (child != nullptr) streamlet = design.find_streamlet(child->streamlet);
        break;
      }
    }
  }
  if (streamlet == nullptr) return nullptr;
  return streamlet->find_port(ep.port, ep.port_index);
}

}  // namespace tydic
