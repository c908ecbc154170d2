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

#include "tydic/ast.hpp"

#include <charconv>
#include <sstream>

namespace tydic {

namespace {

// Precedence levels used by both the printer and the parser's grammar:
// range(0) < or(1) < and(2) < cmp(3) < add(4) < mul(5) < pow(6) < unary(7)
// < postfix(8), atoms(9).
int precedence(const Expr& e) {
  return std::visit(
      [](const auto& node) -> int {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, RangeLit>) return 0;
        else if constexpr (std::is_same_v<T, BinaryExpr>) {
          switch (node.op) {
            case BinaryOp::Or: return 1;
            case BinaryOp::And: return 2;
            case BinaryOp::Eq:
            case BinaryOp::Ne:
            case BinaryOp::Lt:
            case BinaryOp::Le:
            case BinaryOp::Gt:
            case BinaryOp::Ge: return 3;
            case BinaryOp::Add:
            case BinaryOp::Sub: return 4;
            case BinaryOp::Mul:
            case BinaryOp::Div: return 5;
            case BinaryOp::Pow: return 6;
          }
          return 9;
        } else if constexpr (std::is_same_v<T, UnaryExpr>) return 7;
        else if constexpr (std::is_same_v<T, IndexExpr>) return 8;
        else return 9;
      },
      e.node);
}

const char* binop_text(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::Pow: return "^";
    case BinaryOp::Eq: return "==";
    case BinaryOp::Ne: return "!=";
    case BinaryOp::Lt: return "<";
    case BinaryOp::Le: return "<=";
    case BinaryOp::Gt: return ">";
    case BinaryOp::Ge: return ">=";
    case BinaryOp::And: return "&&";
    case BinaryOp::Or: return "||";
  }
  return "?";
}

const char* builtin_text(Builtin fn) {
  switch (fn) {
    case Builtin::Ceil: return "ceil";
    case Builtin::Floor: return "floor";
    case Builtin::Log2: return "log2";
    case Builtin::Log10: return "log10";
    case Builtin::Abs: return "abs";
    case Builtin::Min: return "min";
    case Builtin::Max: return "max";
    case Builtin::Assert: return "assert";
  }
  return "?";
}

std::string escape_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out.push_back(c);
    }
  }
  out.push_back('"');
  return out;
}

std::string float_text(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  std::string s(buf, p);
  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
      s.find("inf") == std::string::npos && s.find("nan") == std::string::npos)
    s += ".0";  // keep the literal a float on re-parse
  return s;
}

class Printer {
 public:
  std::string print_file(const Ast& ast) {
    for (const auto& d : ast.decls) print_decl(d);
    return out_.str();
  }

  std::string print_expr_str(const Expr& e) {
    expr(e, 0);
    return out_.str();
  }

  std::string print_type_str(const TypeExpr& t) {
    type(t);
    return out_.str();
  }

 private:
  void indent() {
    for (int i = 0; i < depth_; ++i) out_ << "  ";
  }

  void expr(const Expr& e, int min_prec) {
    bool parens = precedence(e) < min_prec;
    if (parens) out_ << '(';
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, IntLit>) {
            out_ << node.value.to_string();
          } else if constexpr (std::is_same_v<T, FloatLit>) {
            out_ << float_text(node.value);
          } else if constexpr (std::is_same_v<T, StringLit>) {
            out_ << escape_string(node.value);
          } else if constexpr (std::is_same_v<T, BoolLit>) {
            out_ << (node.value ? "true" : "false");
          } else if constexpr (std::is_same_v<T, Ident>) {
            out_ << node.name;
          } else if constexpr (std::is_same_v<T, ArrayLit>) {
            out_ << '[';
            for (size_t i = 0; i < node.elements.size(); ++i) {
              if (i) out_ << ", ";
              expr(*node.elements[i], 0);
            }
            out_ << ']';
          } else if constexpr (std::is_same_v<T, UnaryExpr>) {
            out_ << (node.op == UnaryOp::Neg ? "-" : "!");
            expr(*node.operand, 7);
          } else if constexpr (std::is_same_v<T, BinaryExpr>) {
            int prec = precedence(e);
            if (node.op == BinaryOp::Pow) {  // right associative
              expr(*node.lhs, prec + 1);
              out_ << " ^ ";
              expr(*node.rhs, prec);
            } else {
              expr(*node.lhs, prec);
              out_ << ' ' << binop_text(node.op) << ' ';
              expr(*node.rhs, prec + 1);
            }
          } else if constexpr (std::is_same_v<T, RangeLit>) {
            // start needs at least add precedence, step at least mul, so the
            // reader's greedy `->` decomposition lands on this subtraction.
            expr(*node.start, 4);
            out_ << " - ";
            expr(*node.step, 5);
            out_ << " -> ";
            expr(*node.end, 1);
          } else if constexpr (std::is_same_v<T, CallExpr>) {
            out_ << builtin_text(node.fn) << '(';
            for (size_t i = 0; i < node.args.size(); ++i) {
              if (i) out_ << ", ";
              expr(*node.args[i], 0);
            }
            out_ << ')';
          } else if constexpr (std::is_same_v<T, IndexExpr>) {
            expr(*node.base, 8);
            out_ << '[';
            expr(*node.index, 0);
            out_ << ']';
          }
        },
        e.node);
    if (parens) out_ << ')';
  }

  void type(const TypeExpr& t) {
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, TypeNull>) {
            out_ << "Null";
          } else if constexpr (std::is_same_v<T, TypeBit>) {
            out_ << "Bit(";
            expr(*node.width, 0);
            out_ << ')';
          } else if constexpr (std::is_same_v<T, TypeStream>) {
            out_ << "Stream(";
            type(*node.element);
            for (const auto& opt : node.opts) {
              out_ << ", ";
              stream_opt(opt);
            }
            out_ << ')';
          } else if constexpr (std::is_same_v<T, TypeRef>) {
            out_ << node.name;
            template_args(node.args);
          }
        },
        t.node);
  }

  void stream_opt(const StreamOpt& opt) {
    switch (opt.kind) {
      case StreamOpt::Kind::Dimension:
        out_ << "d=";
        expr(*opt.value, 0);
        break;
      case StreamOpt::Kind::Throughput:
        out_ << "t=";
        expr(*opt.value, 0);
        break;
      case StreamOpt::Kind::Complexity:
        out_ << "c=";
        expr(*opt.value, 0);
        break;
      case StreamOpt::Kind::Synchronicity: {
        const char* s = "Sync";
        if (opt.sync == Synchronicity::Flatten) s = "Flatten";
        else if (opt.sync == Synchronicity::Desync) s = "Desync";
        else if (opt.sync == Synchronicity::FlatDesync) s = "FlatDesync";
        out_ << "s=\"" << s << '"';
        break;
      }
      case StreamOpt::Kind::Dir:
        out_ << "r=" << (opt.dir == StreamDir::Forward ? "Forward" : "Reverse");
        break;
    }
  }

  void template_args(const std::vector<TemplateArg>& args) {
    if (args.empty()) return;
    out_ << '<';
    for (size_t i = 0; i < args.size(); ++i) {
      if (i) out_ << ", ";
      const auto& a = args[i];
      switch (a.kind) {
        case TemplateArg::Kind::Value: expr(*a.value, 0); break;
        case TemplateArg::Kind::Type:
          out_ << "type ";
          type(*a.type);
          break;
        case TemplateArg::Kind::Impl: out_ << "impl " << a.impl; break;
      }
    }
    out_ << '>';
  }

  void template_params(const std::vector<TemplateParam>& params) {
    if (params.empty()) return;
    out_ << '<';
    for (size_t i = 0; i < params.size(); ++i) {
      if (i) out_ << ", ";
      const auto& p = params[i];
      out_ << p.name << ": ";
      switch (p.kind) {
        case TemplateParam::Kind::Type: out_ << "type"; break;
        case TemplateParam::Kind::ImplOf:
          out_ << "impl of " << p.of_streamlet;
          break;
        case TemplateParam::Kind::Value:
          switch (p.value_kind) {
            case ValueKind::Int: out_ << "int"; break;
            case ValueKind::Float: out_ << "float"; break;
            case ValueKind::String: out_ << "string"; break;
            case ValueKind::Bool: out_ << "bool"; break;
            case ValueKind::ClockDomain: out_ << "clockdomain"; break;
          }
          break;
      }
    }
    out_ << '>';
  }

  void port_ref(const PortRef& ref) {
    if (ref.instance) {
      out_ << *ref.instance;
      if (ref.instance_index) {
        out_ << '[';
        expr(*ref.instance_index, 0);
        out_ << ']';
      }
      out_ << '.';
    }
    out_ << ref.port;
    if (ref.port_index) {
      out_ << '[';
      expr(*ref.port_index, 0);
      out_ << ']';
    }
  }

  void impl_items(const std::vector<ImplItem>& items) {
    ++depth_;
    for (const auto& item : items) {
      indent();
      std::visit(
          [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, InstanceDecl>) {
              out_ << "instance " << node.name << '(' << node.impl_name;
              template_args(node.args);
              out_ << ')';
              if (node.array_size) {
                out_ << " [";
                expr(*node.array_size, 0);
                out_ << ']';
              }
              out_ << ",\n";
            } else if constexpr (std::is_same_v<T, ConnectionItem>) {
              port_ref(node.src);
              out_ << " => ";
              port_ref(node.dst);
              if (node.relax) out_ << " @NoStrictType";
              out_ << ",\n";
            } else if constexpr (std::is_same_v<T, ForItem>) {
              out_ << "for " << node.var << " in ";
              expr(*node.iterable, 0);
              out_ << " {\n";
              impl_items(node.body);
              indent();
              out_ << "}\n";
            } else if constexpr (std::is_same_v<T, IfItem>) {
              out_ << "if (";
              expr(*node.cond, 0);
              out_ << ") {\n";
              impl_items(node.body);
              indent();
              out_ << "}\n";
            } else if constexpr (std::is_same_v<T, AssertItem>) {
              out_ << "assert(";
              expr(*node.cond, 0);
              out_ << "),\n";
            }
          },
          item.node);
    }
    --depth_;
  }

  void print_decl(const Declaration& d) {
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, TypeAliasDecl>) {
            out_ << "type " << d.name << " = ";
            type(*node.type);
            out_ << ";\n";
          } else if constexpr (std::is_same_v<T, GroupDecl> ||
                               std::is_same_v<T, UnionDecl>) {
            out_ << (std::is_same_v<T, GroupDecl> ? "Group " : "Union ")
                 << d.name << " {\n";
            for (const auto& f : node.fields) {
              out_ << "  " << f.name << ": ";
              type(*f.type);
              out_ << ",\n";
            }
            out_ << "}\n";
          } else if constexpr (std::is_same_v<T, ConstDecl>) {
            const char* kind = "int";
            switch (node.kind) {
              case ValueKind::Int: kind = "int"; break;
              case ValueKind::Float: kind = "float"; break;
              case ValueKind::String: kind = "string"; break;
              case ValueKind::Bool: kind = "bool"; break;
              case ValueKind::ClockDomain: kind = "clockdomain"; break;
            }
            if (node.is_array) out_ << '[' << kind << "] ";
            else out_ << kind << ' ';
            out_ << d.name << " = ";
            expr(*node.init, 0);
            out_ << ";\n";
          } else if constexpr (std::is_same_v<T, StreamletDecl>) {
            out_ << "streamlet " << d.name;
            template_params(node.params);
            out_ << " {\n";
            for (const auto& p : node.ports) {
              out_ << "  " << p.name << ": ";
              type(*p.type);
              out_ << (p.dir == PortDirection::In ? " in" : " out");
              if (p.array_size) {
                out_ << " [";
                expr(*p.array_size, 0);
                out_ << ']';
              }
              if (!p.clock_domain.empty()) out_ << " @" << p.clock_domain;
              out_ << ",\n";
            }
            out_ << "}\n";
          } else if constexpr (std::is_same_v<T, ImplDecl>) {
            if (node.external) out_ << "external ";
            out_ << "impl " << d.name;
            template_params(node.params);
            out_ << " of " << node.of_name;
            template_args(node.of_args);
            out_ << " {\n";
            impl_items(node.body);
            out_ << "}\n";
          } else if constexpr (std::is_same_v<T, ImportDecl>) {
            out_ << "import " << escape_string(node.path) << ";\n";
          }
        },
        d.node);
  }

  std::ostringstream out_;
  int depth_ = 0;
};

// -- structural equality ----------------------------------------------------

bool expr_eq(const Expr& a, const Expr& b);
bool type_eq(const TypeExpr& a, const TypeExpr& b);

bool expr_ptr_eq(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  return expr_eq(*a, *b);
}

bool targ_eq(const TemplateArg& a, const TemplateArg& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case TemplateArg::Kind::Value: return expr_eq(*a.value, *b.value);
    case TemplateArg::Kind::Type: return type_eq(*a.type, *b.type);
    case TemplateArg::Kind::Impl: return a.impl == b.impl;
  }
  return false;
}

bool targs_eq(const std::vector<TemplateArg>& a,
              const std::vector<TemplateArg>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!targ_eq(a[i], b[i])) return false;
  return true;
}

bool expr_eq(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& na) -> bool {
        using T = std::decay_t<decltype(na)>;
        const auto& nb = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, IntLit>) {
          return na.value == nb.value;
        } else if constexpr (std::is_same_v<T, FloatLit>) {
          return na.value == nb.value;
        } else if constexpr (std::is_same_v<T, StringLit>) {
          return na.value == nb.value;
        } else if constexpr (std::is_same_v<T, BoolLit>) {
          return na.value == nb.value;
        } else if constexpr (std::is_same_v<T, Ident>) {
          return na.name == nb.name;
        } else if constexpr (std::is_same_v<T, ArrayLit>) {
          if (na.elements.size() != nb.elements.size()) return false;
          for (size_t i = 0; i < na.elements.size(); ++i)
            if (!expr_eq(*na.elements[i], *nb.elements[i])) return false;
          return true;
        } else if constexpr (std::is_same_v<T, UnaryExpr>) {
          return na.op == nb.op && expr_eq(*na.operand, *nb.operand);
        } else if constexpr (std::is_same_v<T, BinaryExpr>) {
          return na.op == nb.op && expr_eq(*na.lhs, *nb.lhs) &&
                 expr_eq(*na.rhs, *nb.rhs);
        } else if constexpr (std::is_same_v<T, RangeLit>) {
          return expr_eq(*na.start, *nb.start) && expr_eq(*na.step, *nb.step) &&
                 expr_eq(*na.end, *nb.end);
        } else if constexpr (std::is_same_v<T, CallExpr>) {
          if (na.fn != nb.fn || na.args.size() != nb.args.size()) return false;
          for (size_t i = 0; i < na.args.size(); ++i)
            if (!expr_eq(*na.args[i], *nb.args[i])) return false;
          return true;
        } else if constexpr (std::is_same_v<T, IndexExpr>) {
          return expr_eq(*na.base, *nb.base) && expr_eq(*na.index, *nb.index);
        }
      },
      a.node);
}

bool type_eq(const TypeExpr& a, const TypeExpr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& na) -> bool {
        using T = std::decay_t<decltype(na)>;
        const auto& nb = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, TypeNull>) {
          return true;
        } else if constexpr (std::is_same_v<T, TypeBit>) {
          return expr_eq(*na.width, *nb.width);
        } else if constexpr (std::is_same_v<T, TypeStream>) {
          if (!type_eq(*na.element, *nb.element)) return false;
          if (na.opts.size() != nb.opts.size()) return false;
          for (size_t i = 0; i < na.opts.size(); ++i) {
            const auto& oa = na.opts[i];
            const auto& ob = nb.opts[i];
            if (oa.kind != ob.kind) return false;
            switch (oa.kind) {
              case StreamOpt::Kind::Synchronicity:
                if (oa.sync != ob.sync) return false;
                break;
              case StreamOpt::Kind::Dir:
                if (oa.dir != ob.dir) return false;
                break;
              default:
                if (!expr_eq(*oa.value, *ob.value)) return false;
            }
          }
          return true;
        } else if constexpr (std::is_same_v<T, TypeRef>) {
          return na.name == nb.name && targs_eq(na.args, nb.args);
        }
      },
      a.node);
}

bool port_ref_eq(const PortRef& a, const PortRef& b) {
  return a.instance == b.instance &&
         expr_ptr_eq(a.instance_index, b.instance_index) && a.port == b.port &&
         expr_ptr_eq(a.port_index, b.port_index);
}

bool impl_item_eq(const ImplItem& a, const ImplItem& b);

bool impl_items_eq(const std::vector<ImplItem>& a,
                   const std::vector<ImplItem>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!impl_item_eq(a[i], b[i])) return false;
  return true;
}

bool impl_item_eq(const ImplItem& a, const ImplItem& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& na) -> bool {
        using T = std::decay_t<decltype(na)>;
        const auto& nb = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, InstanceDecl>) {
          return na.name == nb.name && na.impl_name == nb.impl_name &&
                 targs_eq(na.args, nb.args) &&
                 expr_ptr_eq(na.array_size, nb.array_size);
        } else if constexpr (std::is_same_v<T, ConnectionItem>) {
          return port_ref_eq(na.src, nb.src) && port_ref_eq(na.dst, nb.dst) &&
                 na.relax == nb.relax;
        } else if constexpr (std::is_same_v<T, ForItem>) {
          return na.var == nb.var && expr_eq(*na.iterable, *nb.iterable) &&
                 impl_items_eq(na.body, nb.body);
        } else if constexpr (std::is_same_v<T, IfItem>) {
          return expr_eq(*na.cond, *nb.cond) && impl_items_eq(na.body, nb.body);
        } else if constexpr (std::is_same_v<T, AssertItem>) {
          return expr_eq(*na.cond, *nb.cond);
        }
      },
      a.node);
}

bool tparams_eq(const std::vector<TemplateParam>& a,
                const std::vector<TemplateParam>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].name != b[i].name || a[i].kind != b[i].kind) return false;
    if (a[i].kind == TemplateParam::Kind::Value &&
        a[i].value_kind != b[i].value_kind)
      return false;
    if (a[i].kind == TemplateParam::Kind::ImplOf &&
        a[i].of_streamlet != b[i].of_streamlet)
      return false;
  }
  return true;
}

bool decl_eq(const Declaration& a, const Declaration& b) {
  if (a.name != b.name || a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& na) -> bool {
        using T = std::decay_t<decltype(na)>;
        const auto& nb = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, TypeAliasDecl>) {
          return type_eq(*na.type, *nb.type);
        } else if constexpr (std::is_same_v<T, GroupDecl> ||
                             std::is_same_v<T, UnionDecl>) {
          if (na.fields.size() != nb.fields.size()) return false;
          for (size_t i = 0; i < na.fields.size(); ++i) {
            if (na.fields[i].name != nb.fields[i].name) return false;
            if (!type_eq(*na.fields[i].type, *nb.fields[i].type)) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, ConstDecl>) {
          return na.kind == nb.kind && na.is_array == nb.is_array &&
                 expr_eq(*na.init, *nb.init);
        } else if constexpr (std::is_same_v<T, StreamletDecl>) {
          if (!tparams_eq(na.params, nb.params)) return false;
          if (na.ports.size() != nb.ports.size()) return false;
          for (size_t i = 0; i < na.ports.size(); ++i) {
            const auto& pa = na.ports[i];
            const auto& pb = nb.ports[i];
            if (pa.name != pb.name || pa.dir != pb.dir ||
                pa.clock_domain != pb.clock_domain)
              return false;
            if (!type_eq(*pa.type, *pb.type)) return false;
            if (!expr_ptr_eq(pa.array_size, pb.array_size)) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, ImplDecl>) {
          return na.external == nb.external && tparams_eq(na.params, nb.params) &&
                 na.of_name == nb.of_name && targs_eq(na.of_args, nb.of_args) &&
                 impl_items_eq(na.body, nb.body);
        } else if constexpr (std::is_same_v<T, ImportDecl>) {
          return na.path == nb.path;
        }
      },
      a.node);
}

}  // namespace

std::string to_source(const Ast& ast) { return Printer().print_file(ast); }
std::string to_source(const Expr& e) { return Printer().print_expr_str(e); }
std::string to_source(const TypeExpr& t) { return Printer().print_type_str(t); }

bool ast_equal(const Ast& a, const Ast& b) {
  if (a.decls.size() != b.decls.size()) return false;
  for (size_t i = 0; i < a.decls.size(); ++i)
    if (!decl_eq(a.decls[i], b.decls[i])) return false;
  return true;
}

bool expr_equal(const Expr& a, const Expr& b) { return expr_eq(a, b); }
bool type_expr_equal(const TypeExpr& a, const TypeExpr& b) {
  return type_eq(a, b);
}

}  // namespace tydic
