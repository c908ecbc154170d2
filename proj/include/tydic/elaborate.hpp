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

#include <memory>
#include <string>
#include <vector>

#include "tydic/design.hpp"
#include "tydic/scope.hpp"

namespace tydic {

/// An evaluated template argument.
struct TemplateArgValue {
  enum class Kind { Value, Type, Impl };
  Kind kind = Kind::Value;
  Value value;
  LogicalTypeRef type;
  TypeIdentity impl;

  static TemplateArgValue of(Value v) {
    TemplateArgValue a;
    a.kind = Kind::Value;
    a.value = std::move(v);
    return a;
  }
  static TemplateArgValue of(LogicalTypeRef t) {
    TemplateArgValue a;
    a.kind = Kind::Type;
    a.type = std::move(t);
    return a;
  }
  static TemplateArgValue of(TypeIdentity impl) {
    TemplateArgValue a;
    a.kind = Kind::Impl;
    a.impl = std::move(impl);
    return a;
  }

  std::string canonical() const;  // collision-free identity component
  std::string display() const;   // mangled-name component
};

struct ElaborateOptions {
  int64_t template_depth = 64;
};

/// Instantiates templates, expands for/if blocks and arrays, and flattens
/// everything reachable from the chosen top impl into a concrete design.
/// Instantiation is memoized on (declaration, argument values); recursion
/// deeper than the configured limit is E009.
class Elaborator {
 public:
  Elaborator(const SourceManager& sm, ResolveResult& scopes,
             ElaborateOptions opts = {});
  ~Elaborator();

  /// Finds `top_name` among the user files (it must be a non-templated
  /// impl), instantiates it, and returns its identity. Throws CompileError.
  TypeIdentity instantiate_top(const std::string& top_name);

  /// Instantiates an impl declaration with evaluated arguments.
  TypeIdentity instantiate_impl_decl(const Declaration& decl, Scope& decl_scope,
                                     std::vector<TemplateArgValue> args,
                                     SourceSpan use_span);

  /// Instantiates an impl visible from the builtin scope by name (used by
  /// the sugaring passes for duplicator_i / voider_i).
  TypeIdentity instantiate_builtin(const std::string& name,
                                   std::vector<TemplateArgValue> args,
                                   SourceSpan use_span);

  /// The design under construction (pre-finalize); sugaring rewires it.
  ElaboratedDesign& working_design() { return design_; }

  /// Assigns emit names, orders sections, designates `top`.
  ElaboratedDesign finish(const TypeIdentity& top);

 private:
  class Impl;
  std::unique_ptr<Impl> impl_;
  ElaboratedDesign design_;
};

struct ElaborateResult {
  ElaboratedDesign design;
  DiagnosticList diagnostics;
  bool ok = false;
};

/// One-shot convenience: instantiate `top_name` and finalize.
ElaborateResult elaborate(const SourceManager& sm, ResolveResult& scopes,
                          const std::string& top_name,
                          ElaborateOptions opts = {});

/// Resolves a connection endpoint to the port it touches, or null.
const ElaboratedPort* resolve_endpoint(const ElaboratedDesign& design,
                                       const ElaboratedImpl& impl,
                                       const Endpoint& ep);

/// Post-pass assertion: nothing unevaluated survives elaboration — every
/// port carries a concrete Stream, every instance points at an elaborated
/// impl, every endpoint resolves. Throws std::logic_error on violation
/// (a compiler bug, not a user error).
void validate_elaborated(const ElaboratedDesign& design);

}  // namespace tydic
