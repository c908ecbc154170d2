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

#include "tydic/scope.hpp"

#include <functional>
#include <set>

namespace tydic {

namespace {

/// Value.cpp companions live elsewhere; this file owns scope construction
/// and the resolve pass.

ScopeEntry decl_entry(ScopeEntry::Kind kind, const Declaration& decl,
                      Scope* decl_scope) {
  ScopeEntry e;
  e.kind = kind;
  e.span = decl.span;
  e.decl = &decl;
  e.decl_scope = decl_scope;
  return e;
}

class Resolver {
 public:
  Resolver(const SourceManager& sm, const Ast* builtin_ast,
           const std::vector<const Ast*>& files)
      : sm_(sm), builtin_ast_(builtin_ast), files_(files) {}

  ResolveResult run() {
    result_.builtin = new_scope(nullptr, "<builtin>");
    if (builtin_ast_) populate(*builtin_ast_, result_.builtin);
    for (const Ast* ast : files_) {
      Scope* scope = new_scope(result_.builtin, sm_.name(ast->file));
      result_.file_scopes[ast->file] = scope;
      populate(*ast, scope);
    }
    wire_imports();
    detect_import_cycles();
    for (const Ast* ast : files_)
      check_file(*ast, result_.file_scopes[ast->file]);
    if (builtin_ast_) check_file(*builtin_ast_, result_.builtin);
    result_.diagnostics.sort();
    return std::move(result_);
  }

 private:
  Scope* new_scope(Scope* parent, std::string origin) {
    result_.arena.push_back(std::make_unique<Scope>(parent, std::move(origin)));
    return result_.arena.back().get();
  }

  void populate(const Ast& ast, Scope* scope) {
    for (const auto& decl : ast.decls) {
      ScopeEntry entry;
      bool is_import = false;
      std::visit(
          [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, TypeAliasDecl> ||
                          std::is_same_v<T, GroupDecl> ||
                          std::is_same_v<T, UnionDecl>) {
              entry = decl_entry(ScopeEntry::Kind::TypeDecl, decl, scope);
            } else if constexpr (std::is_same_v<T, ConstDecl>) {
              entry = decl_entry(ScopeEntry::Kind::Const, decl, scope);
            } else if constexpr (std::is_same_v<T, StreamletDecl>) {
              entry = decl_entry(ScopeEntry::Kind::Streamlet, decl, scope);
            } else if constexpr (std::is_same_v<T, ImplDecl>) {
              entry = decl_entry(ScopeEntry::Kind::Impl, decl, scope);
            } else {
              is_import = true;
            }
          },
          decl.node);
      if (is_import) continue;
      if (!scope->define(decl.name, std::move(entry)))
        result_.diagnostics.error(
            "E008", "'" + decl.name + "' is already bound in this scope",
            decl.span);
    }
  }

  void wire_imports() {
    for (const Ast* ast : files_) {
      Scope* scope = result_.file_scopes[ast->file];
      for (const auto& decl : ast->decls) {
        const auto* import = std::get_if<ImportDecl>(&decl.node);
        if (import == nullptr) continue;
        FileId target = sm_.find(import->path);
        auto it = target == kNoFile ? result_.file_scopes.end()
                                    : result_.file_scopes.find(target);
        if (it == result_.file_scopes.end()) {
          result_.diagnostics.error(
              "E002", "imported file '" + import->path + "' is not in the build",
              decl.span);
          continue;
        }
        if (it->second == scope) {
          result_.diagnostics.error("E002", "a file cannot import itself",
                                    decl.span);
          continue;
        }
        // Collisions with local names or earlier imports break the
        // one-binding-per-scope rule.
        for (const auto& [name, import_entry] : it->second->bindings()) {
          (void)import_entry;
          if (scope->lookup_local(name) != nullptr)
            result_.diagnostics.error(
                "E008",
                "import brings in '" + name + "', which is already bound here",
                decl.span);
          else
            for (Scope* prev : scope->imports())
              if (prev->lookup_local(name) != nullptr)
                result_.diagnostics.error(
                    "E008",
                    "'" + name + "' is provided by two imports", decl.span);
        }
        scope->add_import(it->second);
        import_edges_[ast->file].push_back({target, decl.span});
      }
    }
  }

  void detect_import_cycles() {
    std::set<FileId> done;
    std::set<FileId> path;
    std::function<void(FileId)> visit = [&](FileId file) {
      if (done.count(file)) return;
      path.insert(file);
      for (const auto& [target, span] : import_edges_[file]) {
        if (path.count(target)) {
          result_.diagnostics.error("E002", "import cycle detected", span);
          continue;
        }
        visit(target);
      }
      path.erase(file);
      done.insert(file);
    };
    for (const Ast* ast : files_) visit(ast->file);
  }

  // -- reference checking ---------------------------------------------------
  // Existence checks only: category and value errors surface at evaluation.

  void check_expr(const Expr& e, Scope& scope) {
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, Ident>) {
            if (scope.lookup(node.name) == nullptr)
              result_.diagnostics.error(
                  "E002", "unresolved name '" + node.name + "'", e.span);
          } else if constexpr (std::is_same_v<T, ArrayLit>) {
            for (const auto& elem : node.elements) check_expr(*elem, scope);
          } else if constexpr (std::is_same_v<T, UnaryExpr>) {
            check_expr(*node.operand, scope);
          } else if constexpr (std::is_same_v<T, BinaryExpr>) {
            check_expr(*node.lhs, scope);
            check_expr(*node.rhs, scope);
          } else if constexpr (std::is_same_v<T, RangeLit>) {
            check_expr(*node.start, scope);
            check_expr(*node.step, scope);
            check_expr(*node.end, scope);
          } else if constexpr (std::is_same_v<T, CallExpr>) {
            for (const auto& a : node.args) check_expr(*a, scope);
          } else if constexpr (std::is_same_v<T, IndexExpr>) {
            check_expr(*node.base, scope);
            check_expr(*node.index, scope);
          }
        },
        e.node);
  }

  void check_type(const TypeExpr& t, Scope& scope) {
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, TypeBit>) {
            check_expr(*node.width, scope);
          } else if constexpr (std::is_same_v<T, TypeStream>) {
            check_type(*node.element, scope);
            for (const auto& opt : node.opts)
              if (opt.value) check_expr(*opt.value, scope);
          } else if constexpr (std::is_same_v<T, TypeRef>) {
            if (!node.args.empty()) {
              result_.diagnostics.error(
                  "E009", "logical type templates are not supported", t.span);
              return;
            }
            ScopeEntry* entry = scope.lookup(node.name);
            if (entry == nullptr)
              result_.diagnostics.error(
                  "E002", "unresolved type name '" + node.name + "'", t.span);
          }
        },
        t.node);
  }

  void check_template_args(const std::vector<TemplateArg>& args, Scope& scope) {
    for (const auto& a : args) {
      switch (a.kind) {
        case TemplateArg::Kind::Value: check_expr(*a.value, scope); break;
        case TemplateArg::Kind::Type: check_type(*a.type, scope); break;
        case TemplateArg::Kind::Impl:
          if (scope.lookup(a.impl) == nullptr)
            result_.diagnostics.error(
                "E002", "unresolved impl name '" + a.impl + "'", a.span);
          break;
      }
    }
  }

  /// Declares template params with placeholder payloads so that references
  /// inside the template body resolve.
  Scope* param_scope(const std::vector<TemplateParam>& params, Scope* parent) {
    if (params.empty()) return parent;
    Scope* scope = new_scope(parent, parent->origin());
    for (const auto& p : params) {
      ScopeEntry entry;
      entry.span = p.span;
      switch (p.kind) {
        case TemplateParam::Kind::Value:
          entry.kind = ScopeEntry::Kind::Value;
          break;
        case TemplateParam::Kind::Type:
          entry.kind = ScopeEntry::Kind::Type;
          break;
        case TemplateParam::Kind::ImplOf: {
          entry.kind = ScopeEntry::Kind::ImplArg;
          ScopeEntry* target = parent->lookup(p.of_streamlet);
          if (target == nullptr)
            result_.diagnostics.error(
                "E002", "unresolved streamlet '" + p.of_streamlet + "'",
                p.span);
          else if (target->kind != ScopeEntry::Kind::Streamlet)
            result_.diagnostics.error(
                "E002", "'" + p.of_streamlet + "' is not a streamlet", p.span);
          break;
        }
      }
      if (!scope->define(p.name, std::move(entry)))
        result_.diagnostics.error(
            "E008", "duplicate template parameter '" + p.name + "'", p.span);
    }
    return scope;
  }

  void check_impl_items(const std::vector<ImplItem>& items, Scope* scope) {
    for (const auto& item : items) {
      std::visit(
          [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, InstanceDecl>) {
              ScopeEntry* target = scope->lookup(node.impl_name);
              if (target == nullptr)
                result_.diagnostics.error(
                    "E002", "unresolved impl name '" + node.impl_name + "'",
                    node.impl_span);
              else if (target->kind != ScopeEntry::Kind::Impl &&
                       target->kind != ScopeEntry::Kind::ImplArg)
                result_.diagnostics.error(
                    "E002", "'" + node.impl_name + "' is not an impl",
                    node.impl_span);
              check_template_args(node.args, *scope);
              if (node.array_size) check_expr(*node.array_size, *scope);
            } else if constexpr (std::is_same_v<T, ConnectionItem>) {
              if (node.src.instance_index)
                check_expr(*node.src.instance_index, *scope);
              if (node.src.port_index) check_expr(*node.src.port_index, *scope);
              if (node.dst.instance_index)
                check_expr(*node.dst.instance_index, *scope);
              if (node.dst.port_index) check_expr(*node.dst.port_index, *scope);
            } else if constexpr (std::is_same_v<T, ForItem>) {
              check_expr(*node.iterable, *scope);
              Scope* inner = new_scope(scope, scope->origin());
              ScopeEntry loop_var;
              loop_var.kind = ScopeEntry::Kind::Value;
              inner->define(node.var, std::move(loop_var));
              check_impl_items(node.body, inner);
            } else if constexpr (std::is_same_v<T, IfItem>) {
              check_expr(*node.cond, *scope);
              check_impl_items(node.body, scope);
            } else if constexpr (std::is_same_v<T, AssertItem>) {
              check_expr(*node.cond, *scope);
            }
          },
          item.node);
    }
  }

  void check_file(const Ast& ast, Scope* file_scope) {
    for (const auto& decl : ast.decls) {
      std::visit(
          [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, TypeAliasDecl>) {
              check_type(*node.type, *file_scope);
            } else if constexpr (std::is_same_v<T, GroupDecl> ||
                                 std::is_same_v<T, UnionDecl>) {
              std::set<std::string> names;
              for (const auto& f : node.fields) {
                if (!names.insert(f.name).second)
                  result_.diagnostics.error(
                      "E008", "duplicate field '" + f.name + "'", f.span);
                check_type(*f.type, *file_scope);
              }
            } else if constexpr (std::is_same_v<T, ConstDecl>) {
              check_expr(*node.init, *file_scope);
            } else if constexpr (std::is_same_v<T, StreamletDecl>) {
              Scope* scope = param_scope(node.params, file_scope);
              std::set<std::string> names;
              for (const auto& p : node.ports) {
                if (!names.insert(p.name).second)
                  result_.diagnostics.error(
                      "E008", "duplicate port '" + p.name + "'", p.span);
                check_type(*p.type, *scope);
                if (p.array_size) check_expr(*p.array_size, *scope);
              }
            } else if constexpr (std::is_same_v<T, ImplDecl>) {
              Scope* scope = param_scope(node.params, file_scope);
              ScopeEntry* target = scope->lookup(node.of_name);
              if (target == nullptr)
                result_.diagnostics.error(
                    "E002", "unresolved streamlet '" + node.of_name + "'",
                    node.of_span);
              else if (target->kind != ScopeEntry::Kind::Streamlet)
                result_.diagnostics.error(
                    "E002", "'" + node.of_name + "' is not a streamlet",
                    node.of_span);
              check_template_args(node.of_args, *scope);
              check_impl_items(node.body, scope);
            }
          },
          decl.node);
    }
  }

  const SourceManager& sm_;
  const Ast* builtin_ast_;
  const std::vector<const Ast*>& files_;
  ResolveResult result_;
  std::map<FileId, std::vector<std::pair<FileId, SourceSpan>>> import_edges_;
};

}  // namespace

ResolveResult resolve(const SourceManager& sm, const Ast* builtin_ast,
                      const std::vector<const Ast*>& files) {
  return Resolver(sm, builtin_ast, files).run();
}

}  // namespace tydic
