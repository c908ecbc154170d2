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

#include "tydic/parser.hpp"

#include <charconv>
#include <unordered_map>

#include "tydic/lexer.hpp"

namespace tydic {

namespace {

const std::unordered_map<std::string, Builtin>& builtin_table() {
  static const std::unordered_map<std::string, Builtin> table = {
      {"ceil", Builtin::Ceil},   {"floor", Builtin::Floor},
      {"log2", Builtin::Log2},   {"log10", Builtin::Log10},
      {"abs", Builtin::Abs},     {"min", Builtin::Min},
      {"max", Builtin::Max},
  };
  return table;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, FileId file)
      : tokens_(std::move(tokens)), file_(file) {}

  Ast parse_file() {
    Ast ast;
    ast.file = file_;
    while (!at(Tok::End)) ast.decls.push_back(parse_declaration());
    return ast;
  }

  ExprPtr parse_expr_only() {
    ExprPtr e = parse_expr();
    expect(Tok::End, "end of expression");
    return e;
  }

 private:
  const Token& peek(size_t ahead = 0) const {
    size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }

  bool at(Tok kind) const { return peek().kind == kind; }

  const Token& advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  bool accept(Tok kind) {
    if (!at(kind)) return false;
    advance();
    return true;
  }

  const Token& expect(Tok kind, const char* what) {
    if (!at(kind))
      fail("E001",
           std::string("expected ") + what + ", found " +
               token_name(peek().kind),
           peek().span);
    return advance();
  }

  std::string expect_ident(const char* what) {
    return expect(Tok::Ident, what).text;
  }

  // -- declarations ---------------------------------------------------------

  Declaration parse_declaration() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::KwType: return parse_type_alias();
      case Tok::KwGroup: return parse_group_or_union(true);
      case Tok::KwUnion: return parse_group_or_union(false);
      case Tok::KwInt:
      case Tok::KwFloat:
      case Tok::KwString:
      case Tok::KwBool:
      case Tok::KwClockdomain: return parse_const();
      case Tok::LBracket: return parse_array_const();
      case Tok::KwStreamlet: return parse_streamlet();
      case Tok::KwExternal:
      case Tok::KwImpl: return parse_impl();
      case Tok::KwImport: return parse_import();
      default:
        fail("E001",
             std::string("expected declaration, found ") +
                 token_name(t.kind),
             t.span);
    }
  }

  Declaration parse_type_alias() {
    SourceSpan span = advance().span;  // 'type'
    std::string name = expect_ident("type name");
    expect(Tok::Assign, "'='");
    TypeAliasDecl alias;
    alias.type = parse_type_expr();
    expect(Tok::Semi, "';'");
    return Declaration{span, std::move(name), std::move(alias)};
  }

  Declaration parse_group_or_union(bool is_group) {
    SourceSpan span = advance().span;
    std::string name = expect_ident(is_group ? "Group name" : "Union name");
    expect(Tok::LBrace, "'{'");
    std::vector<FieldDecl> fields;
    while (!accept(Tok::RBrace)) {
      FieldDecl f;
      f.span = peek().span;
      f.name = expect_ident("field name");
      expect(Tok::Colon, "':'");
      f.type = parse_type_expr();
      expect(Tok::Comma, "','");
      fields.push_back(std::move(f));
    }
    if (fields.empty())
      fail("E001",
           std::string(is_group ? "Group" : "Union") +
               " must declare at least one field",
           span);
    if (is_group)
      return Declaration{span, std::move(name), GroupDecl{std::move(fields)}};
    return Declaration{span, std::move(name), UnionDecl{std::move(fields)}};
  }

  ValueKind basic_kind(const Token& t) {
    switch (t.kind) {
      case Tok::KwInt: return ValueKind::Int;
      case Tok::KwFloat: return ValueKind::Float;
      case Tok::KwString: return ValueKind::String;
      case Tok::KwBool: return ValueKind::Bool;
      case Tok::KwClockdomain: return ValueKind::ClockDomain;
      default:
        fail("E001",
             std::string("expected value kind, found ") + token_name(t.kind),
             t.span);
    }
  }

  Declaration parse_const() {
    SourceSpan span = peek().span;
    ValueKind kind = basic_kind(advance());
    std::string name = expect_ident("constant name");
    expect(Tok::Assign, "'='");
    ConstDecl decl;
    decl.kind = kind;
    decl.init = parse_expr();
    expect(Tok::Semi, "';'");
    return Declaration{span, std::move(name), std::move(decl)};
  }

  Declaration parse_array_const() {
    SourceSpan span = advance().span;  // '['
    ValueKind kind = basic_kind(advance());
    expect(Tok::RBracket, "']'");
    std::string name = expect_ident("constant name");
    expect(Tok::Assign, "'='");
    SourceSpan lit_span = expect(Tok::LBracket, "'['").span;
    auto lit = ArrayLit{};
    lit.elements.push_back(parse_expr());
    while (accept(Tok::Comma)) lit.elements.push_back(parse_expr());
    expect(Tok::RBracket, "']'");
    expect(Tok::Semi, "';'");
    ConstDecl decl;
    decl.kind = kind;
    decl.is_array = true;
    decl.init = std::make_unique<Expr>(Expr{lit_span, std::move(lit)});
    return Declaration{span, std::move(name), std::move(decl)};
  }

  Declaration parse_streamlet() {
    SourceSpan span = advance().span;
    std::string name = expect_ident("streamlet name");
    StreamletDecl decl;
    if (at(Tok::Lt)) decl.params = parse_template_params();
    expect(Tok::LBrace, "'{'");
    while (!accept(Tok::RBrace)) decl.ports.push_back(parse_port());
    return Declaration{span, std::move(name), std::move(decl)};
  }

  PortDecl parse_port() {
    PortDecl port;
    port.span = peek().span;
    port.name = expect_ident("port name");
    expect(Tok::Colon, "':'");
    port.type = parse_type_expr();
    if (accept(Tok::KwIn)) {
      port.dir = PortDirection::In;
    } else if (at(Tok::Ident) && peek().text == "out") {
      advance();
      port.dir = PortDirection::Out;
    } else {
      fail("E001", "expected port direction 'in' or 'out'", peek().span);
    }
    if (accept(Tok::LBracket)) {
      port.array_size = parse_expr();
      expect(Tok::RBracket, "']'");
    }
    if (accept(Tok::At)) port.clock_domain = expect_ident("clock domain name");
    expect(Tok::Comma, "','");
    return port;
  }

  Declaration parse_impl() {
    SourceSpan span = peek().span;
    ImplDecl decl;
    if (accept(Tok::KwExternal)) decl.external = true;
    expect(Tok::KwImpl, "'impl'");
    std::string name = expect_ident("impl name");
    if (at(Tok::Lt)) decl.params = parse_template_params();
    expect(Tok::KwOf, "'of'");
    decl.of_span = peek().span;
    decl.of_name = expect_ident("streamlet name");
    if (at(Tok::Lt)) decl.of_args = parse_template_args();
    expect(Tok::LBrace, "'{'");
    decl.body = parse_impl_body();
    return Declaration{span, std::move(name), std::move(decl)};
  }

  std::vector<ImplItem> parse_impl_body() {
    std::vector<ImplItem> items;
    while (!accept(Tok::RBrace)) items.push_back(parse_impl_item());
    return items;
  }

  ImplItem parse_impl_item() {
    SourceSpan span = peek().span;
    switch (peek().kind) {
      case Tok::KwInstance: return ImplItem{span, parse_instance()};
      case Tok::KwFor: return ImplItem{span, parse_for()};
      case Tok::KwIf: return ImplItem{span, parse_if()};
      case Tok::KwAssert: return ImplItem{span, parse_assert()};
      case Tok::Ident: return ImplItem{span, parse_connection()};
      default:
        fail("E001",
             std::string("expected instance, connection, 'for', 'if' or "
                         "'assert', found ") +
                 token_name(peek().kind),
             span);
    }
  }

  InstanceDecl parse_instance() {
    advance();  // 'instance'
    InstanceDecl decl;
    decl.name = expect_ident("instance name");
    expect(Tok::LParen, "'('");
    decl.impl_span = peek().span;
    decl.impl_name = expect_ident("impl name");
    if (at(Tok::Lt)) decl.args = parse_template_args();
    expect(Tok::RParen, "')'");
    if (accept(Tok::LBracket)) {
      decl.array_size = parse_expr();
      expect(Tok::RBracket, "']'");
    }
    expect(Tok::Comma, "','");
    return decl;
  }

  ForItem parse_for() {
    advance();  // 'for'
    ForItem item;
    item.var = expect_ident("loop variable");
    expect(Tok::KwIn, "'in'");
    item.iterable = parse_expr();
    expect(Tok::LBrace, "'{'");
    item.body = parse_impl_body();
    return item;
  }

  IfItem parse_if() {
    advance();  // 'if'
    IfItem item;
    expect(Tok::LParen, "'('");
    item.cond = parse_expr();
    expect(Tok::RParen, "')'");
    expect(Tok::LBrace, "'{'");
    item.body = parse_impl_body();
    return item;
  }

  AssertItem parse_assert() {
    advance();  // 'assert'
    AssertItem item;
    expect(Tok::LParen, "'('");
    item.cond = parse_expr();
    expect(Tok::RParen, "')'");
    expect(Tok::Comma, "','");
    return item;
  }

  ConnectionItem parse_connection() {
    ConnectionItem conn;
    conn.src = parse_port_ref();
    expect(Tok::FatArrow, "'=>'");
    conn.dst = parse_port_ref();
    if (accept(Tok::At)) {
      const Token& attr = expect(Tok::Ident, "connection attribute");
      if (attr.text != "NoStrictType")
        fail("E001",
             "unknown connection attribute '@" + attr.text +
                 "' (only @NoStrictType is defined)",
             attr.span);
      conn.relax = true;
    }
    expect(Tok::Comma, "','");
    return conn;
  }

  PortRef parse_port_ref() {
    PortRef ref;
    ref.span = peek().span;
    std::string first = expect_ident("port reference");
    ExprPtr first_index;
    if (accept(Tok::LBracket)) {
      first_index = parse_expr();
      expect(Tok::RBracket, "']'");
    }
    if (accept(Tok::Dot)) {
      ref.instance = std::move(first);
      ref.instance_index = std::move(first_index);
      ref.port = expect_ident("port name");
      if (accept(Tok::LBracket)) {
        ref.port_index = parse_expr();
        expect(Tok::RBracket, "']'");
      }
    } else {
      ref.port = std::move(first);
      ref.port_index = std::move(first_index);
    }
    return ref;
  }

  Declaration parse_import() {
    SourceSpan span = advance().span;
    const Token& path = expect(Tok::StringLit, "import path string");
    expect(Tok::Semi, "';'");
    return Declaration{span, "", ImportDecl{path.text}};
  }

  // -- templates ------------------------------------------------------------

  std::vector<TemplateParam> parse_template_params() {
    expect(Tok::Lt, "'<'");
    std::vector<TemplateParam> params;
    do {
      TemplateParam p;
      p.span = peek().span;
      p.name = expect_ident("template parameter name");
      expect(Tok::Colon, "':'");
      if (accept(Tok::KwType)) {
        p.kind = TemplateParam::Kind::Type;
      } else if (accept(Tok::KwImpl)) {
        p.kind = TemplateParam::Kind::ImplOf;
        expect(Tok::KwOf, "'of'");
        p.of_streamlet = expect_ident("streamlet name");
      } else {
        p.kind = TemplateParam::Kind::Value;
        p.value_kind = basic_kind(advance());
      }
      params.push_back(std::move(p));
    } while (accept(Tok::Comma));
    expect(Tok::Gt, "'>'");
    return params;
  }

  std::vector<TemplateArg> parse_template_args() {
    expect(Tok::Lt, "'<'");
    std::vector<TemplateArg> args;
    do {
      TemplateArg a;
      a.span = peek().span;
      if (accept(Tok::KwType)) {
        a.kind = TemplateArg::Kind::Type;
        a.type = parse_type_expr();
      } else if (accept(Tok::KwImpl)) {
        a.kind = TemplateArg::Kind::Impl;
        a.impl = expect_ident("impl name");
      } else {
        a.kind = TemplateArg::Kind::Value;
        bool saved = no_gt_;
        no_gt_ = true;
        a.value = parse_expr();
        no_gt_ = saved;
      }
      args.push_back(std::move(a));
    } while (accept(Tok::Comma));
    expect(Tok::Gt, "'>'");
    return args;
  }

  // -- types ----------------------------------------------------------------

  TypeExprPtr parse_type_expr() {
    SourceSpan span = peek().span;
    switch (peek().kind) {
      case Tok::KwNull:
        advance();
        return std::make_unique<TypeExpr>(TypeExpr{span, TypeNull{}});
      case Tok::KwBit: {
        advance();
        expect(Tok::LParen, "'('");
        TypeBit bit;
        bit.width = parse_expr();
        expect(Tok::RParen, "')'");
        return std::make_unique<TypeExpr>(TypeExpr{span, std::move(bit)});
      }
      case Tok::KwStream: return parse_stream_type(span);
      case Tok::Ident: {
        TypeRef ref;
        ref.name = advance().text;
        if (at(Tok::Lt)) ref.args = parse_template_args();
        return std::make_unique<TypeExpr>(TypeExpr{span, std::move(ref)});
      }
      default:
        fail("E001",
             std::string("expected type expression, found ") +
                 token_name(peek().kind),
             span);
    }
  }

  TypeExprPtr parse_stream_type(SourceSpan span) {
    advance();  // 'Stream'
    expect(Tok::LParen, "'('");
    TypeStream stream;
    stream.element = parse_type_expr();
    while (accept(Tok::Comma)) stream.opts.push_back(parse_stream_opt());
    expect(Tok::RParen, "')'");
    return std::make_unique<TypeExpr>(TypeExpr{span, std::move(stream)});
  }

  StreamOpt parse_stream_opt() {
    StreamOpt opt;
    opt.span = peek().span;
    std::string key = expect_ident("stream option");
    expect(Tok::Assign, "'='");
    if (key == "dimension" || key == "d") {
      opt.kind = StreamOpt::Kind::Dimension;
      opt.value = parse_expr();
    } else if (key == "throughput" || key == "t") {
      opt.kind = StreamOpt::Kind::Throughput;
      opt.value = parse_expr();
    } else if (key == "complexity" || key == "c") {
      opt.kind = StreamOpt::Kind::Complexity;
      opt.value = parse_expr();
    } else if (key == "synchronicity" || key == "s") {
      opt.kind = StreamOpt::Kind::Synchronicity;
      const Token& s = expect(Tok::StringLit, "synchronicity string");
      if (s.text == "Sync") opt.sync = Synchronicity::Sync;
      else if (s.text == "Flatten") opt.sync = Synchronicity::Flatten;
      else if (s.text == "Desync") opt.sync = Synchronicity::Desync;
      else if (s.text == "FlatDesync") opt.sync = Synchronicity::FlatDesync;
      else
        fail("E001",
             "unknown synchronicity \"" + s.text +
                 "\" (expected Sync, Flatten, Desync or FlatDesync)",
             s.span);
    } else if (key == "direction" || key == "r") {
      opt.kind = StreamOpt::Kind::Dir;
      const Token& d = expect(Tok::Ident, "'Forward' or 'Reverse'");
      if (d.text == "Forward") opt.dir = StreamDir::Forward;
      else if (d.text == "Reverse") opt.dir = StreamDir::Reverse;
      else fail("E001", "expected 'Forward' or 'Reverse'", d.span);
    } else {
      fail("E001", "unknown stream option '" + key + "'", opt.span);
    }
    return opt;
  }

  // -- expressions ----------------------------------------------------------
  //
  // Precedence (low to high): range, ||, &&, comparison, +/-, */ /, ^
  // (right-assoc), unary, index. `a-b->c` forms a range: the `->` claims the
  // nearest enclosing subtraction greedily.

  ExprPtr parse_expr() {
    ExprPtr e = parse_or();
    if (at(Tok::Arrow)) {
      SourceSpan arrow = advance().span;
      auto* bin = std::get_if<BinaryExpr>(&e->node);
      if (bin == nullptr || bin->op != BinaryOp::Sub)
        fail("E001", "malformed range: expected 'start-step->end' (step missing)",
             arrow);
      RangeLit range;
      SourceSpan span = e->span;
      range.start = std::move(bin->lhs);
      range.step = std::move(bin->rhs);
      range.end = parse_or();
      if (at(Tok::Arrow))
        fail("E001", "range takes exactly start, step and end", peek().span);
      return std::make_unique<Expr>(Expr{span, std::move(range)});
    }
    return e;
  }

  ExprPtr parse_or() {
    ExprPtr lhs = parse_and();
    while (at(Tok::OrOr)) {
      SourceSpan span = advance().span;
      ExprPtr rhs = parse_and();
      lhs = make_binary(BinaryOp::Or, std::move(lhs), std::move(rhs), span);
    }
    return lhs;
  }

  ExprPtr parse_and() {
    ExprPtr lhs = parse_cmp();
    while (at(Tok::AndAnd)) {
      SourceSpan span = advance().span;
      ExprPtr rhs = parse_cmp();
      lhs = make_binary(BinaryOp::And, std::move(lhs), std::move(rhs), span);
    }
    return lhs;
  }

  ExprPtr parse_cmp() {
    ExprPtr lhs = parse_add();
    for (;;) {
      BinaryOp op;
      switch (peek().kind) {
        case Tok::EqEq: op = BinaryOp::Eq; break;
        case Tok::NotEq: op = BinaryOp::Ne; break;
        case Tok::Lt: op = BinaryOp::Lt; break;
        case Tok::Le: op = BinaryOp::Le; break;
        case Tok::Gt:
          if (no_gt_) return lhs;  // terminates a template argument
          op = BinaryOp::Gt;
          break;
        case Tok::Ge:
          if (no_gt_) return lhs;
          op = BinaryOp::Ge;
          break;
        default: return lhs;
      }
      SourceSpan span = advance().span;
      ExprPtr rhs = parse_add();
      lhs = make_binary(op, std::move(lhs), std::move(rhs), span);
    }
  }

  ExprPtr parse_add() {
    ExprPtr lhs = parse_mul();
    for (;;) {
      BinaryOp op;
      if (at(Tok::Plus)) op = BinaryOp::Add;
      else if (at(Tok::Minus)) op = BinaryOp::Sub;
      else return lhs;
      SourceSpan span = advance().span;
      ExprPtr rhs = parse_mul();
      lhs = make_binary(op, std::move(lhs), std::move(rhs), span);
    }
  }

  ExprPtr parse_mul() {
    ExprPtr lhs = parse_pow();
    for (;;) {
      BinaryOp op;
      if (at(Tok::Star)) op = BinaryOp::Mul;
      else if (at(Tok::Slash)) op = BinaryOp::Div;
      else return lhs;
      SourceSpan span = advance().span;
      ExprPtr rhs = parse_pow();
      lhs = make_binary(op, std::move(lhs), std::move(rhs), span);
    }
  }

  ExprPtr parse_pow() {
    ExprPtr lhs = parse_unary();
    if (at(Tok::Caret)) {
      SourceSpan span = advance().span;
      ExprPtr rhs = parse_pow();  // right associative
      return make_binary(BinaryOp::Pow, std::move(lhs), std::move(rhs), span);
    }
    return lhs;
  }

  ExprPtr parse_unary() {
    if (at(Tok::Minus) || at(Tok::Bang)) {
      UnaryOp op = at(Tok::Minus) ? UnaryOp::Neg : UnaryOp::Not;
      SourceSpan span = advance().span;
      ExprPtr operand = parse_unary();
      return std::make_unique<Expr>(
          Expr{span, UnaryExpr{op, std::move(operand)}});
    }
    return parse_postfix();
  }

  ExprPtr parse_postfix() {
    ExprPtr e = parse_primary();
    while (at(Tok::LBracket)) {
      SourceSpan span = advance().span;
      bool saved = no_gt_;
      no_gt_ = false;
      ExprPtr index = parse_expr();
      no_gt_ = saved;
      expect(Tok::RBracket, "']'");
      e = std::make_unique<Expr>(
          Expr{span, IndexExpr{std::move(e), std::move(index)}});
    }
    return e;
  }

  ExprPtr parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::IntLit: {
        advance();
        return std::make_unique<Expr>(
            Expr{t.span, IntLit{BigInt::from_string(t.text)}});
      }
      case Tok::FloatLit: {
        advance();
        double v = 0;
        auto [p, ec] =
            std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || p != t.text.data() + t.text.size())
          fail("E001", "malformed float literal", t.span);
        return std::make_unique<Expr>(Expr{t.span, FloatLit{v}});
      }
      case Tok::StringLit:
        advance();
        return std::make_unique<Expr>(Expr{t.span, StringLit{t.text}});
      case Tok::KwTrue:
        advance();
        return std::make_unique<Expr>(Expr{t.span, BoolLit{true}});
      case Tok::KwFalse:
        advance();
        return std::make_unique<Expr>(Expr{t.span, BoolLit{false}});
      case Tok::KwAssert: {
        advance();
        expect(Tok::LParen, "'('");
        CallExpr call{Builtin::Assert, {}};
        bool saved = no_gt_;
        no_gt_ = false;
        call.args.push_back(parse_expr());
        no_gt_ = saved;
        expect(Tok::RParen, "')'");
        return std::make_unique<Expr>(Expr{t.span, std::move(call)});
      }
      case Tok::Ident: {
        auto it = builtin_table().find(t.text);
        if (it != builtin_table().end() && peek(1).kind == Tok::LParen) {
          advance();
          advance();
          CallExpr call{it->second, {}};
          bool saved = no_gt_;
          no_gt_ = false;
          call.args.push_back(parse_expr());
          while (accept(Tok::Comma)) call.args.push_back(parse_expr());
          no_gt_ = saved;
          expect(Tok::RParen, "')'");
          check_arity(it->second, call.args.size(), t.span);
          return std::make_unique<Expr>(Expr{t.span, std::move(call)});
        }
        advance();
        return std::make_unique<Expr>(Expr{t.span, Ident{t.text}});
      }
      case Tok::LParen: {
        advance();
        bool saved = no_gt_;
        no_gt_ = false;
        ExprPtr e = parse_expr();
        no_gt_ = saved;
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::LBracket: {
        advance();
        ArrayLit lit;
        bool saved = no_gt_;
        no_gt_ = false;
        lit.elements.push_back(parse_expr());
        while (accept(Tok::Comma)) lit.elements.push_back(parse_expr());
        no_gt_ = saved;
        expect(Tok::RBracket, "']'");
        return std::make_unique<Expr>(Expr{t.span, std::move(lit)});
      }
      default:
        fail("E001",
             std::string("expected expression, found ") + token_name(t.kind),
             t.span);
    }
  }

  void check_arity(Builtin fn, size_t n, SourceSpan span) {
    size_t want = (fn == Builtin::Min || fn == Builtin::Max) ? 2 : 1;
    if (n != want)
      fail("E001",
           "builtin takes " + std::to_string(want) + " argument" +
               (want == 1 ? "" : "s") + ", got " + std::to_string(n),
           span);
  }

  static ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs,
                             SourceSpan span) {
    return std::make_unique<Expr>(
        Expr{span, BinaryExpr{op, std::move(lhs), std::move(rhs)}});
  }

  std::vector<Token> tokens_;
  FileId file_;
  size_t pos_ = 0;
  bool no_gt_ = false;
};

}  // namespace

ParseResult parse(const std::string& text, FileId file) {
  ParseResult result;
  try {
    Parser parser(lex(text, file), file);
    result.ast = parser.parse_file();
  } catch (const CompileError& err) {
    result.diagnostics.add(err.diag());
    result.ast.reset();
  }
  return result;
}

ExprPtr parse_expression(const std::string& text, FileId file) {
  Parser parser(lex(text, file), file);
  return parser.parse_expr_only();
}

}  // namespace tydic
