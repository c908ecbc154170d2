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

#include "tydic/eval.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace tydic {

namespace {

constexpr uint64_t kMaxPowExponent = 1u << 20;
constexpr int64_t kMaxRangeLength = 1 << 20;

// -- Value ------------------------------------------------------------------

Value eval_const_entry(ScopeEntry& entry);

Value lookup_value(const std::string& name, Scope& scope, SourceSpan span) {
  ScopeEntry* entry = scope.lookup(name);
  if (entry == nullptr)
    fail("E002", "unresolved name '" + name + "'", span);
  switch (entry->kind) {
    case ScopeEntry::Kind::Value:
      return entry->value;
    case ScopeEntry::Kind::Const:
      return eval_const_entry(*entry);
    default:
      fail("E010", "'" + name + "' is not a value", span);
  }
}

Value coerce_const(const Value& v, ValueKind kind, SourceSpan span) {
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
  fail("E010",
       std::string("expected ") + value_kind_name(kind) + " value, got " +
           v.kind_name(),
       span);
}

Value eval_const_entry(ScopeEntry& entry) {
  if (entry.state == ScopeEntry::State::Done) return entry.value;
  if (entry.state == ScopeEntry::State::Busy)
    fail("E010", "cyclic constant definition", entry.span);
  entry.state = ScopeEntry::State::Busy;
  const auto& decl = std::get<ConstDecl>(entry.decl->node);
  Value v = eval(*decl.init, *entry.decl_scope);
  if (decl.is_array) {
    if (!v.is_array())
      fail("E010", "array constant needs an array initializer", entry.span);
    std::vector<Value> elems;
    for (const auto& e : v.as_array().elements)
      elems.push_back(coerce_const(e, decl.kind, entry.span));
    v = Value::array(decl.kind, std::move(elems));
  } else {
    v = coerce_const(v, decl.kind, entry.span);
  }
  entry.value = std::move(v);
  entry.state = ScopeEntry::State::Done;
  return entry.value;
}

// -- numeric helpers --------------------------------------------------------

BigInt double_to_bigint(double v, SourceSpan span) {
  if (!std::isfinite(v)) fail("E010", "value is not finite", span);
  char buf[512];
  std::snprintf(buf, sizeof(buf), "%.0f", v);
  return BigInt::from_string(buf);
}

Value numeric_binop(BinaryOp op, const Value& lhs, const Value& rhs,
                    SourceSpan span) {
  if (lhs.is_int() && rhs.is_int()) {
    const BigInt& a = lhs.as_int();
    const BigInt& b = rhs.as_int();
    switch (op) {
      case BinaryOp::Add: return Value::integer(a + b);
      case BinaryOp::Sub: return Value::integer(a - b);
      case BinaryOp::Mul: return Value::integer(a * b);
      case BinaryOp::Div: {
        if (b.is_zero()) fail("E010", "division by zero", span);
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        if (r.is_zero()) return Value::integer(q);
        return Value::real(a.to_double() / b.to_double());
      }
      case BinaryOp::Pow: {
        if (b.is_negative())
          return Value::real(std::pow(a.to_double(), b.to_double()));
        if (!b.fits_int64() ||
            static_cast<uint64_t>(b.to_int64()) > kMaxPowExponent)
          fail("E010", "exponent too large", span);
        return Value::integer(a.pow(static_cast<uint64_t>(b.to_int64())));
      }
      default: break;
    }
  }
  double a = lhs.numeric();
  double b = rhs.numeric();
  switch (op) {
    case BinaryOp::Add: return Value::real(a + b);
    case BinaryOp::Sub: return Value::real(a - b);
    case BinaryOp::Mul: return Value::real(a * b);
    case BinaryOp::Div:
      if (b == 0.0) fail("E010", "division by zero", span);
      return Value::real(a / b);
    case BinaryOp::Pow: return Value::real(std::pow(a, b));
    default: break;
  }
  fail("E010", "bad numeric operator", span);
}

int numeric_compare(const Value& lhs, const Value& rhs) {
  if (lhs.is_int() && rhs.is_int()) return lhs.as_int().compare(rhs.as_int());
  double a = lhs.numeric();
  double b = rhs.numeric();
  if (a < b) return -1;
  if (a > b) return 1;
  return 0;
}

Value compare_binop(BinaryOp op, const Value& lhs, const Value& rhs,
                    SourceSpan span) {
  if (op == BinaryOp::Eq || op == BinaryOp::Ne) {
    bool eq;
    if (lhs.is_numeric() && rhs.is_numeric()) {
      eq = numeric_compare(lhs, rhs) == 0;
    } else if (lhs.kind() == rhs.kind() && !lhs.is_array()) {
      eq = lhs == rhs;
    } else {
      fail("E010",
           std::string("cannot compare ") + lhs.kind_name() + " with " +
               rhs.kind_name(),
           span);
    }
    return Value::boolean(op == BinaryOp::Eq ? eq : !eq);
  }
  if (!lhs.is_numeric() || !rhs.is_numeric())
    fail("E010",
         std::string("ordered comparison needs numbers, got ") +
             lhs.kind_name() + " and " + rhs.kind_name(),
         span);
  int c = numeric_compare(lhs, rhs);
  bool result = false;
  switch (op) {
    case BinaryOp::Lt: result = c < 0; break;
    case BinaryOp::Le: result = c <= 0; break;
    case BinaryOp::Gt: result = c > 0; break;
    case BinaryOp::Ge: result = c >= 0; break;
    default: break;
  }
  return Value::boolean(result);
}

const BigInt& want_int(const Value& v, const char* what, SourceSpan span) {
  if (!v.is_int())
    fail("E010",
         std::string(what) + " must be an integer, got " + v.kind_name(),
         span);
  return v.as_int();
}

Value eval_range(const RangeLit& range, Scope& scope, SourceSpan span) {
  BigInt start = want_int(eval(*range.start, scope), "range start", span);
  BigInt step = want_int(eval(*range.step, scope), "range step", span);
  BigInt end = want_int(eval(*range.end, scope), "range end", span);
  if (step <= BigInt(0)) fail("E010", "range step must be positive", span);
  std::vector<Value> elems;
  // Length is max(0, ceil((end-start)/step)); bounded to keep elaboration
  // sane.
  for (BigInt v = start; v < end; v = v + step) {
    if (static_cast<int64_t>(elems.size()) >= kMaxRangeLength)
      fail("E010", "range too large", span);
    elems.push_back(Value::integer(v));
  }
  return Value::array(ValueKind::Int, std::move(elems));
}

Value eval_call(const CallExpr& call, Scope& scope, SourceSpan span) {
  // ceil(log2(n)) and floor(log2(n)) on integers go through the exact
  // bit-length path; a float round trip misrounds near powers of two once
  // n outgrows the mantissa.
  if ((call.fn == Builtin::Ceil || call.fn == Builtin::Floor) &&
      call.args.size() == 1) {
    if (const auto* inner = std::get_if<CallExpr>(&call.args[0]->node)) {
      if (inner->fn == Builtin::Log2 && inner->args.size() == 1) {
        Value v = eval(*inner->args[0], scope);
        if (v.is_int()) {
          if (v.as_int() <= BigInt(0))
            fail("E010", "log2 of non-positive number", span);
          if (call.fn == Builtin::Ceil)
            return Value::integer(BigInt(ceil_log2(v.as_int())));
          return Value::integer(BigInt(floor_log2(v.as_int())));
        }
        // fall through to the float path below
        double x = v.numeric();
        if (x <= 0) fail("E010", "log2 of non-positive number", span);
        double l = std::log2(x);
        return Value::integer(double_to_bigint(
            call.fn == Builtin::Ceil ? std::ceil(l) : std::floor(l), span));
      }
    }
  }

  std::vector<Value> args;
  for (const auto& a : call.args) args.push_back(eval(*a, scope));

  switch (call.fn) {
    case Builtin::Ceil:
    case Builtin::Floor: {
      const Value& v = args[0];
      if (v.is_int()) return v;
      if (!v.is_float())
        fail("E010", std::string("ceil/floor needs a number, got ") +
                         v.kind_name(), span);
      double x = v.as_float();
      return Value::integer(double_to_bigint(
          call.fn == Builtin::Ceil ? std::ceil(x) : std::floor(x), span));
    }
    case Builtin::Log2:
    case Builtin::Log10: {
      const Value& v = args[0];
      if (!v.is_numeric())
        fail("E010",
             std::string("log needs a number, got ") + v.kind_name(), span);
      double x = v.numeric();
      if (x <= 0) fail("E010", "log of non-positive number", span);
      return Value::real(call.fn == Builtin::Log2 ? std::log2(x)
                                                  : std::log10(x));
    }
    case Builtin::Abs: {
      const Value& v = args[0];
      if (v.is_int()) return Value::integer(v.as_int().abs());
      if (v.is_float()) return Value::real(std::fabs(v.as_float()));
      fail("E010", std::string("abs needs a number, got ") + v.kind_name(),
           span);
    }
    case Builtin::Min:
    case Builtin::Max: {
      const Value& a = args[0];
      const Value& b = args[1];
      if (!a.is_numeric() || !b.is_numeric())
        fail("E010", "min/max need numbers", span);
      int c = numeric_compare(a, b);
      const Value& pick =
          (call.fn == Builtin::Min) ? (c <= 0 ? a : b) : (c >= 0 ? a : b);
      if (a.is_float() || b.is_float())
        return pick.is_float() ? pick : Value::real(pick.numeric());
      return pick;
    }
    case Builtin::Assert: {
      const Value& v = args[0];
      if (!v.is_bool())
        fail("E010",
             std::string("assert needs a boolean, got ") + v.kind_name(),
             span);
      if (!v.as_bool()) fail("E007", "assertion failed", span);
      return Value::boolean(true);
    }
  }
  fail("E010", "unknown builtin", span);
}

}  // namespace

int64_t ceil_log2(const BigInt& n) {
  if (n <= BigInt(0))
    fail("E010", "log2 of non-positive number", {});
  if (n == BigInt(1)) return 0;
  return static_cast<int64_t>((n - BigInt(1)).bit_length());
}

int64_t floor_log2(const BigInt& n) {
  if (n <= BigInt(0))
    fail("E010", "log2 of non-positive number", {});
  return static_cast<int64_t>(n.bit_length()) - 1;
}

Value eval(const Expr& e, Scope& scope) {
  return std::visit(
      [&](const auto& node) -> Value {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, IntLit>) {
          return Value::integer(node.value);
        } else if constexpr (std::is_same_v<T, FloatLit>) {
          return Value::real(node.value);
        } else if constexpr (std::is_same_v<T, StringLit>) {
          return Value::str(node.value);
        } else if constexpr (std::is_same_v<T, BoolLit>) {
          return Value::boolean(node.value);
        } else if constexpr (std::is_same_v<T, Ident>) {
          return lookup_value(node.name, scope, e.span);
        } else if constexpr (std::is_same_v<T, ArrayLit>) {
          std::vector<Value> elems;
          for (const auto& elem : node.elements) {
            Value v = eval(*elem, scope);
            if (v.is_array())
              fail("E010", "arrays cannot nest", elem->span);
            elems.push_back(std::move(v));
          }
          if (elems.empty()) fail("E010", "empty array literal", e.span);
          ValueKind kind = elems.front().kind();
          for (const auto& v : elems)
            if (v.kind() != kind)
              fail("E010", "array elements must share one kind", e.span);
          return Value::array(kind, std::move(elems));
        } else if constexpr (std::is_same_v<T, UnaryExpr>) {
          Value v = eval(*node.operand, scope);
          if (node.op == UnaryOp::Neg) {
            if (v.is_int()) return Value::integer(-v.as_int());
            if (v.is_float()) return Value::real(-v.as_float());
            fail("E010",
                 std::string("negation needs a number, got ") + v.kind_name(),
                 e.span);
          }
          if (!v.is_bool())
            fail("E010",
                 std::string("'!' needs a boolean, got ") + v.kind_name(),
                 e.span);
          return Value::boolean(!v.as_bool());
        } else if constexpr (std::is_same_v<T, BinaryExpr>) {
          if (node.op == BinaryOp::And || node.op == BinaryOp::Or) {
            Value lhs = eval(*node.lhs, scope);
            if (!lhs.is_bool())
              fail("E010", "logical operator needs booleans", node.lhs->span);
            if (node.op == BinaryOp::And && !lhs.as_bool())
              return Value::boolean(false);
            if (node.op == BinaryOp::Or && lhs.as_bool())
              return Value::boolean(true);
            Value rhs = eval(*node.rhs, scope);
            if (!rhs.is_bool())
              fail("E010", "logical operator needs booleans", node.rhs->span);
            return rhs;
          }
          Value lhs = eval(*node.lhs, scope);
          Value rhs = eval(*node.rhs, scope);
          switch (node.op) {
            case BinaryOp::Add:
              if (lhs.is_string() && rhs.is_string())
                return Value::str(lhs.as_string() + rhs.as_string());
              [[fallthrough]];
            case BinaryOp::Sub:
            case BinaryOp::Mul:
            case BinaryOp::Div:
            case BinaryOp::Pow:
              if (!lhs.is_numeric() || !rhs.is_numeric())
                fail("E010",
                     std::string("arithmetic needs numbers, got ") +
                         lhs.kind_name() + " and " + rhs.kind_name(),
                     e.span);
              return numeric_binop(node.op, lhs, rhs, e.span);
            default:
              return compare_binop(node.op, lhs, rhs, e.span);
          }
        } else if constexpr (std::is_same_v<T, RangeLit>) {
          return eval_range(node, scope, e.span);
        } else if constexpr (std::is_same_v<T, CallExpr>) {
          return eval_call(node, scope, e.span);
        } else if constexpr (std::is_same_v<T, IndexExpr>) {
          Value base = eval(*node.base, scope);
          if (!base.is_array())
            fail("E010", "indexing needs an array", node.base->span);
          Value idx = eval(*node.index, scope);
          const BigInt& i = want_int(idx, "array index", node.index->span);
          BigInt size(static_cast<int64_t>(base.as_array().elements.size()));
          if (i.is_negative() || i >= size)
            fail("E010", "array index out of bounds", node.index->span);
          return base.as_array().elements[static_cast<size_t>(i.to_int64())];
        }
      },
      e.node);
}

void eval_assert(const Expr& e, Scope& scope) {
  Value v = eval(e, scope);
  if (!v.is_bool())
    fail("E010",
         std::string("assert needs a boolean, got ") + v.kind_name(), e.span);
  if (!v.as_bool())
    fail("E007", "assertion failed: " + to_source(e), e.span);
}

std::string eval_clock_domain(const std::string& name, Scope& scope,
                              SourceSpan span) {
  if (name.empty()) return default_clock_domain();
  ScopeEntry* entry = scope.lookup(name);
  if (entry == nullptr) return name;  // the annotation itself names a domain
  if (entry->kind == ScopeEntry::Kind::Value && entry->value.is_clock())
    return entry->value.as_clock().name;
  if (entry->kind == ScopeEntry::Kind::Const) {
    Value v = eval_const_entry(*entry);
    if (v.is_clock()) return v.as_clock().name;
    fail("E010", "'" + name + "' is not a clock domain", span);
  }
  if (entry->kind == ScopeEntry::Kind::Value)
    fail("E010", "'" + name + "' is not a clock domain", span);
  return name;
}

// -- type evaluation --------------------------------------------------------

namespace {

LogicalTypeRef eval_type_decl(ScopeEntry& entry);

LogicalTypeRef lookup_type(const std::string& name, Scope& scope,
                           SourceSpan span) {
  ScopeEntry* entry = scope.lookup(name);
  if (entry == nullptr) fail("E002", "unresolved type name '" + name + "'", span);
  switch (entry->kind) {
    case ScopeEntry::Kind::Type:
      return entry->type;
    case ScopeEntry::Kind::TypeDecl:
      return eval_type_decl(*entry);
    default:
      fail("E002", "'" + name + "' is not a type", span);
  }
}

LogicalTypeRef eval_type_decl(ScopeEntry& entry) {
  if (entry.state == ScopeEntry::State::Done) return entry.type;
  if (entry.state == ScopeEntry::State::Busy)
    fail("E010", "cyclic type definition", entry.span);
  entry.state = ScopeEntry::State::Busy;

  const Declaration& decl = *entry.decl;
  Scope& scope = *entry.decl_scope;
  LogicalTypeRef result;
  if (const auto* alias = std::get_if<TypeAliasDecl>(&decl.node)) {
    TypeIdentity id{scope.origin(), decl.name, {}, {}};
    result = make_type(
        LogicalType{AliasType{std::move(id), eval_type(*alias->type, scope)}});
  } else {
    const auto* group = std::get_if<GroupDecl>(&decl.node);
    const auto* uni = std::get_if<UnionDecl>(&decl.node);
    const auto& fields = group ? group->fields : uni->fields;
    std::vector<std::pair<std::string, LogicalTypeRef>> elems;
    for (const auto& f : fields)
      elems.emplace_back(f.name, eval_type(*f.type, scope));
    TypeIdentity id{scope.origin(), decl.name, {}, {}};
    if (group)
      result = make_type(LogicalType{GroupType{std::move(id), std::move(elems)}});
    else
      result = make_type(LogicalType{UnionType{std::move(id), std::move(elems)}});
  }
  entry.type = std::move(result);
  entry.state = ScopeEntry::State::Done;
  return entry.type;
}

int64_t eval_int_param(const Expr& e, Scope& scope, const char* what,
                       int64_t min) {
  Value v = eval(e, scope);
  if (!v.is_int())
    fail("E011",
         std::string(what) + " must be an integer, got " + v.kind_name(),
         e.span);
  if (!v.as_int().fits_int64())
    fail("E011", std::string(what) + " out of range", e.span);
  int64_t n = v.as_int().to_int64();
  if (n < min)
    fail("E011",
         std::string(what) + " must be at least " + std::to_string(min) +
             ", got " + std::to_string(n),
         e.span);
  return n;
}

}  // namespace

LogicalTypeRef eval_type(const TypeExpr& t, Scope& scope) {
  return std::visit(
      [&](const auto& node) -> LogicalTypeRef {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, TypeNull>) {
          return make_type(LogicalType{NullType{}});
        } else if constexpr (std::is_same_v<T, TypeBit>) {
          int64_t w = eval_int_param(*node.width, scope, "bit width", 1);
          return make_type(LogicalType{BitType{w}});
        } else if constexpr (std::is_same_v<T, TypeStream>) {
          StreamType stream;
          stream.element = eval_type(*node.element, scope);
          bool seen[5] = {};
          for (const auto& opt : node.opts) {
            int slot = static_cast<int>(opt.kind);
            if (seen[slot])
              fail("E011", "duplicate stream option", opt.span);
            seen[slot] = true;
            switch (opt.kind) {
              case StreamOpt::Kind::Dimension:
                stream.dimension =
                    eval_int_param(*opt.value, scope, "stream dimension", 0);
                break;
              case StreamOpt::Kind::Complexity:
                stream.complexity =
                    eval_int_param(*opt.value, scope, "stream complexity", 1);
                break;
              case StreamOpt::Kind::Throughput: {
                Value v = eval(*opt.value, scope);
                if (!v.is_numeric())
                  fail("E011", "stream throughput must be a number", opt.span);
                double tp = v.numeric();
                if (!(tp > 0))
                  fail("E011", "stream throughput must be positive", opt.span);
                stream.throughput = tp;
                break;
              }
              case StreamOpt::Kind::Synchronicity:
                stream.synchronicity = opt.sync;
                break;
              case StreamOpt::Kind::Dir:
                stream.direction = opt.dir;
                break;
            }
          }
          return make_type(LogicalType{std::move(stream)});
        } else if constexpr (std::is_same_v<T, TypeRef>) {
          if (!node.args.empty())
            fail("E009", "logical type templates are not supported", t.span);
          return lookup_type(node.name, scope, t.span);
        }
      },
      t.node);
}

}  // namespace tydic
