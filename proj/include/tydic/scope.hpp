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
#include <memory>
#include <string>
#include <vector>

#include "tydic/ast.hpp"
#include "tydic/logical_type.hpp"
#include "tydic/value.hpp"

namespace tydic {

/// One name binding. Constants and type declarations evaluate lazily, on
/// first lookup, with a Busy state for cycle detection; template arguments
/// and loop variables bind eagerly.
struct ScopeEntry {
  enum class Kind {
    Value,      // eager value (loop variable, value template argument)
    Const,      // lazy `int x = ...` style declaration
    Type,       // eager logical type (type template argument)
    TypeDecl,   // lazy alias / Group / Union declaration
    Streamlet,  // streamlet declaration
    Impl,       // impl declaration
    ImplArg,    // instantiated impl bound to an `impl of` parameter
  };
  enum class State { Idle, Busy, Done };

  Kind kind = Kind::Value;
  SourceSpan span;
  Value value;                          // Value payload / Const cache
  LogicalTypeRef type;                  // Type payload / TypeDecl cache
  const Declaration* decl = nullptr;    // Const/TypeDecl/Streamlet/Impl
  class Scope* decl_scope = nullptr;    // lexical scope of `decl`
  TypeIdentity impl_id;                 // ImplArg payload
  State state = State::Idle;
};

/// Lexical scope: bindings plus a parent chain. A name binds at most once
/// per scope (immutability); an inner binding shadows outer ones. File
/// scopes additionally consult directly imported files' own bindings.
class Scope {
 public:
  Scope(Scope* parent, std::string origin)
      : parent_(parent), origin_(std::move(origin)) {}

  /// False when the name is already bound in this scope.
  bool define(const std::string& name, ScopeEntry entry) {
    return bindings_.emplace(name, std::move(entry)).second;
  }

  ScopeEntry* lookup_local(const std::string& name) {
    auto it = bindings_.find(name);
    return it == bindings_.end() ? nullptr : &it->second;
  }

  ScopeEntry* lookup(const std::string& name) {
    if (auto* e = lookup_local(name)) return e;
    for (Scope* import : imports_)
      if (auto* e = import->lookup_local(name)) return e;
    return parent_ ? parent_->lookup(name) : nullptr;
  }

  void add_import(Scope* file_scope) { imports_.push_back(file_scope); }

  Scope* parent() const { return parent_; }
  const std::string& origin() const { return origin_; }
  const std::map<std::string, ScopeEntry>& bindings() const {
    return bindings_;
  }
  const std::vector<Scope*>& imports() const { return imports_; }

 private:
  Scope* parent_;
  std::string origin_;
  std::map<std::string, ScopeEntry> bindings_;
  std::vector<Scope*> imports_;
};

struct ResolveResult {
  std::vector<std::unique_ptr<Scope>> arena;
  Scope* builtin = nullptr;
  std::map<FileId, Scope*> file_scopes;
  DiagnosticList diagnostics;

  Scope* scope_of(FileId file) {
    auto it = file_scopes.find(file);
    return it == file_scopes.end() ? nullptr : it->second;
  }
};

/// Builds the scope tree for an ast-set and checks that every identifier
/// reference resolves. `builtin_ast` (the compiled-in template library) may
/// be null; when present its declarations parent every file scope. Import
/// paths are matched against SourceManager file names.
ResolveResult resolve(const SourceManager& sm, const Ast* builtin_ast,
                      const std::vector<const Ast*>& files);

}  // namespace tydic
