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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tydic/bigint.hpp"
#include "tydic/diagnostic.hpp"

namespace tydic {

struct Expr;
struct TypeExpr;
using ExprPtr = std::unique_ptr<Expr>;
using TypeExprPtr = std::unique_ptr<TypeExpr>;

enum class UnaryOp { Neg, Not };
enum class BinaryOp {
  Add,
  Sub,
  Mul,
  Div,
  Pow,
  Eq,
  Ne,
  Lt,
  Le,
  Gt,
  Ge,
  And,
  Or,
};

enum class Builtin { Ceil, Floor, Log2, Log10, Abs, Min, Max, Assert };

struct IntLit {
  BigInt value;
};
struct FloatLit {
  double value;
};
struct StringLit {
  std::string value;
};
struct BoolLit {
  bool value;
};
struct Ident {
  std::string name;
};
struct ArrayLit {
  std::vector<ExprPtr> elements;
};
struct UnaryExpr {
  UnaryOp op;
  ExprPtr operand;
};
struct BinaryExpr {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};
/// start-step->end, end-exclusive (semantics fixed by the evaluator).
struct RangeLit {
  ExprPtr start;
  ExprPtr step;
  ExprPtr end;
};
struct CallExpr {
  Builtin fn;
  std::vector<ExprPtr> args;
};
struct IndexExpr {
  ExprPtr base;
  ExprPtr index;
};

struct Expr {
  SourceSpan span;
  std::variant<IntLit, FloatLit, StringLit, BoolLit, Ident, ArrayLit,
               UnaryExpr, BinaryExpr, RangeLit, CallExpr, IndexExpr>
      node;
};

// ---------------------------------------------------------------------------
// Types as written in source (unevaluated).

enum class StreamDir { Forward, Reverse };
enum class Synchronicity { Sync, Flatten, Desync, FlatDesync };

struct StreamOpt {
  enum class Kind { Dimension, Throughput, Complexity, Synchronicity, Dir };
  Kind kind;
  ExprPtr value;           // Dimension/Throughput/Complexity
  Synchronicity sync{};    // Synchronicity
  StreamDir dir{};         // Dir
  SourceSpan span;
};

struct TemplateArg;

struct TypeNull {};
struct TypeBit {
  ExprPtr width;
};
struct TypeStream {
  TypeExprPtr element;
  std::vector<StreamOpt> opts;
};
struct TypeRef {
  std::string name;
  std::vector<TemplateArg> args;  // rejected at resolve: no type templates
};

struct TypeExpr {
  SourceSpan span;
  std::variant<TypeNull, TypeBit, TypeStream, TypeRef> node;
};

struct TemplateArg {
  enum class Kind { Value, Type, Impl };
  Kind kind;
  ExprPtr value;        // Value
  TypeExprPtr type;     // Type
  std::string impl;     // Impl
  SourceSpan span;
};

// ---------------------------------------------------------------------------
// Declarations.

enum class ValueKind { Int, Float, String, Bool, ClockDomain };

struct TemplateParam {
  enum class Kind { Value, Type, ImplOf };
  std::string name;
  Kind kind;
  ValueKind value_kind{};     // Kind::Value
  std::string of_streamlet;   // Kind::ImplOf
  SourceSpan span;
};

struct TypeAliasDecl {
  TypeExprPtr type;
};

struct FieldDecl {
  std::string name;
  TypeExprPtr type;
  SourceSpan span;
};

struct GroupDecl {
  std::vector<FieldDecl> fields;
};
struct UnionDecl {
  std::vector<FieldDecl> fields;
};

struct ConstDecl {
  ValueKind kind;
  bool is_array = false;
  ExprPtr init;
};

enum class PortDirection { In, Out };

struct PortDecl {
  std::string name;
  TypeExprPtr type;
  PortDirection dir;
  ExprPtr array_size;       // null unless a port array
  std::string clock_domain; // empty -> default domain
  SourceSpan span;
};

struct StreamletDecl {
  std::vector<TemplateParam> params;
  std::vector<PortDecl> ports;
};

struct ImplItem;

struct InstanceDecl {
  std::string name;
  std::string impl_name;
  std::vector<TemplateArg> args;
  ExprPtr array_size;  // null unless an instance array
  SourceSpan impl_span;
};

/// `port`, `port[i]`, `inst.port`, `inst[i].port[j]`; a missing instance
/// part means the enclosing impl's own port.
struct PortRef {
  std::optional<std::string> instance;
  ExprPtr instance_index;  // may be null
  std::string port;
  ExprPtr port_index;  // may be null
  SourceSpan span;
};

struct ConnectionItem {
  PortRef src;
  PortRef dst;
  bool relax = false;  // @NoStrictType: hierarchy equality instead of strict
};

struct ForItem {
  std::string var;
  ExprPtr iterable;
  std::vector<ImplItem> body;
};

struct IfItem {
  ExprPtr cond;
  std::vector<ImplItem> body;
};

struct AssertItem {
  ExprPtr cond;
};

struct ImplItem {
  SourceSpan span;
  std::variant<InstanceDecl, ConnectionItem, ForItem, IfItem, AssertItem> node;
};

struct ImplDecl {
  bool external = false;
  std::vector<TemplateParam> params;
  std::string of_name;
  std::vector<TemplateArg> of_args;
  SourceSpan of_span;
  std::vector<ImplItem> body;
};

struct ImportDecl {
  std::string path;
};

struct Declaration {
  SourceSpan span;
  std::string name;  // empty for imports
  std::variant<TypeAliasDecl, GroupDecl, UnionDecl, ConstDecl, StreamletDecl,
               ImplDecl, ImportDecl>
      node;
};

struct Ast {
  FileId file = kNoFile;
  std::vector<Declaration> decls;
};

// ---------------------------------------------------------------------------

/// Renders an Ast back to surface syntax. Guaranteed to re-parse to a
/// structurally identical tree (round-trip property).
std::string to_source(const Ast& ast);
std::string to_source(const Expr& e);
std::string to_source(const TypeExpr& t);

/// Structural equality ignoring spans.
bool ast_equal(const Ast& a, const Ast& b);
bool expr_equal(const Expr& a, const Expr& b);
bool type_expr_equal(const TypeExpr& a, const TypeExpr& b);

}  // namespace tydic
