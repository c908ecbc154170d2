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

#include <charconv>
#include <map>

#include "tydic/ir.hpp"

namespace tydic {

namespace {

// The IR has its own tiny token set; emitted names may contain '%' escapes,
// so the surface-language lexer does not apply.
struct IrToken {
  enum class Kind {
    End,
    Ident,
    Number,
    String,
    LBrace,
    RBrace,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Colon,
    Comma,
    Assign,
    Arrow,  // =>
    At,
    Dot,
  };
  Kind kind = Kind::End;
  std::string text;
  SourceSpan span;
};

class IrLexer {
 public:
  IrLexer(const std::string& text, FileId file) : text_(text), file_(file) {}

  std::vector<IrToken> run() {
    std::vector<IrToken> out;
    for (;;) {
      skip_ws();
      IrToken t = next();
      out.push_back(t);
      if (t.kind == IrToken::Kind::End) break;
    }
    return out;
  }

 private:
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '%';
  }

  char peek(size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  SourceSpan here(uint32_t len) const { return {file_, line_, col_, len}; }

  void skip_ws() {
    while (peek() == ' ' || peek() == '\t' || peek() == '\r' || peek() == '\n')
      advance();
  }

  IrToken next() {
    if (pos_ >= text_.size()) return {IrToken::Kind::End, "", here(0)};
    SourceSpan span = here(1);
    char c = peek();
    if (ident_char(c) && !std::isdigit(static_cast<unsigned char>(c))) {
      std::string text;
      while (ident_char(peek())) text.push_back(advance());
      span.length = static_cast<uint32_t>(text.size());
      return {IrToken::Kind::Ident, std::move(text), span};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string text;
      while (std::isdigit(static_cast<unsigned char>(peek())))
        text.push_back(advance());
      if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
        text.push_back(advance());
        while (std::isdigit(static_cast<unsigned char>(peek())))
          text.push_back(advance());
      }
      if (peek() == 'e' || peek() == 'E') {
        text.push_back(advance());
        if (peek() == '+' || peek() == '-') text.push_back(advance());
        while (std::isdigit(static_cast<unsigned char>(peek())))
          text.push_back(advance());
      }
      span.length = static_cast<uint32_t>(text.size());
      return {IrToken::Kind::Number, std::move(text), span};
    }
    if (c == '"') {
      advance();
      std::string text;
      for (;;) {
        char d = peek();
        if (d == '\0' || d == '\n')
          fail("E001", "unterminated string in IR", span);
        advance();
        if (d == '"') break;
        if (d == '\\') {
          text.push_back(advance());
          continue;
        }
        text.push_back(d);
      }
      span.length = static_cast<uint32_t>(text.size()) + 2;
      return {IrToken::Kind::String, std::move(text), span};
    }
    advance();
    switch (c) {
      case '{': return {IrToken::Kind::LBrace, "{", span};
      case '}': return {IrToken::Kind::RBrace, "}", span};
      case '(': return {IrToken::Kind::LParen, "(", span};
      case ')': return {IrToken::Kind::RParen, ")", span};
      case '[': return {IrToken::Kind::LBracket, "[", span};
      case ']': return {IrToken::Kind::RBracket, "]", span};
      case ':': return {IrToken::Kind::Colon, ":", span};
      case ',': return {IrToken::Kind::Comma, ",", span};
      case '@': return {IrToken::Kind::At, "@", span};
      case '.': return {IrToken::Kind::Dot, ".", span};
      case '=':
        if (peek() == '>') {
          advance();
          span.length = 2;
          return {IrToken::Kind::Arrow, "=>", span};
        }
        return {IrToken::Kind::Assign, "=", span};
      default:
        fail("E001", std::string("unexpected character '") + c + "' in IR",
             span);
    }
  }

  const std::string& text_;
  FileId file_;
  size_t pos_ = 0;
  uint32_t line_ = 1;
  uint32_t col_ = 1;
};

class IrReader {
 public:
  IrReader(std::vector<IrToken> tokens) : tokens_(std::move(tokens)) {}

  ElaboratedDesign run() {
    expect_keyword("tir");
    expect(IrToken::Kind::Number, "IR version");
    for (;;) {
      const IrToken& t = peek();
      if (t.kind == IrToken::Kind::End)
        fail("E001", "IR document has no 'top' designation", t.span);
      if (t.kind != IrToken::Kind::Ident)
        fail("E001", "expected IR declaration", t.span);
      if (t.text == "alias") read_alias();
      else if (t.text == "group") read_fields(NamedTypeDecl::Kind::Group);
      else if (t.text == "union") read_fields(NamedTypeDecl::Kind::Union);
      else if (t.text == "streamlet") read_streamlet();
      else if (t.text == "impl" || t.text == "external") read_impl();
      else if (t.text == "top") break;
      else fail("E001", "unknown IR declaration '" + t.text + "'", t.span);
    }
    advance();  // 'top'
    design_.top = expect(IrToken::Kind::Ident, "top impl name").text;
    expect(IrToken::Kind::End, "end of IR document");
    return std::move(design_);
  }

 private:
  const IrToken& peek(size_t ahead = 0) const {
    size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }

  const IrToken& advance() {
    return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_];
  }

  const IrToken& expect(IrToken::Kind kind, const char* what) {
    if (peek().kind != kind)
      fail("E001",
           std::string("expected ") + what + " in IR, found '" + peek().text +
               "'",
           peek().span);
    return advance();
  }

  void expect_keyword(const std::string& kw) {
    const IrToken& t = peek();
    if (t.kind != IrToken::Kind::Ident || t.text != kw)
      fail("E001", "expected '" + kw + "' in IR, found '" + t.text + "'",
           t.span);
    advance();
  }

  bool accept_keyword(const std::string& kw) {
    if (peek().kind == IrToken::Kind::Ident && peek().text == kw) {
      advance();
      return true;
    }
    return false;
  }

  bool accept(IrToken::Kind kind) {
    if (peek().kind != kind) return false;
    advance();
    return true;
  }

  int64_t read_int(const char* what) {
    const IrToken& t = expect(IrToken::Kind::Number, what);
    int64_t v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || p != t.text.data() + t.text.size())
      fail("E001", std::string("malformed integer for ") + what, t.span);
    return v;
  }

  double read_double(const char* what) {
    const IrToken& t = expect(IrToken::Kind::Number, what);
    double v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || p != t.text.data() + t.text.size())
      fail("E001", std::string("malformed number for ") + what, t.span);
    return v;
  }

  LogicalTypeRef read_type_ref() {
    const IrToken& t = expect(IrToken::Kind::Ident, "type reference");
    if (t.text == "Null") return make_type(LogicalType{NullType{}});
    if (t.text == "Bit") {
      expect(IrToken::Kind::LParen, "'('");
      int64_t w = read_int("bit width");
      expect(IrToken::Kind::RParen, "')'");
      return make_type(LogicalType{BitType{w}});
    }
    if (t.text == "Stream") {
      expect(IrToken::Kind::LParen, "'('");
      StreamType stream;
      stream.element = read_type_ref();
      expect(IrToken::Kind::Comma, "','");
      expect_keyword("d");
      expect(IrToken::Kind::Assign, "'='");
      stream.dimension = read_int("dimension");
      expect(IrToken::Kind::Comma, "','");
      expect_keyword("r");
      expect(IrToken::Kind::Assign, "'='");
      const IrToken& dir = expect(IrToken::Kind::Ident, "direction");
      if (dir.text == "Forward") stream.direction = StreamDir::Forward;
      else if (dir.text == "Reverse") stream.direction = StreamDir::Reverse;
      else fail("E001", "bad stream direction", dir.span);
      expect(IrToken::Kind::Comma, "','");
      expect_keyword("t");
      expect(IrToken::Kind::Assign, "'='");
      stream.throughput = read_double("throughput");
      expect(IrToken::Kind::Comma, "','");
      expect_keyword("c");
      expect(IrToken::Kind::Assign, "'='");
      stream.complexity = read_int("complexity");
      expect(IrToken::Kind::Comma, "','");
      expect_keyword("s");
      expect(IrToken::Kind::Assign, "'='");
      const IrToken& sync = expect(IrToken::Kind::String, "synchronicity");
      if (sync.text == "Sync") stream.synchronicity = Synchronicity::Sync;
      else if (sync.text == "Flatten")
        stream.synchronicity = Synchronicity::Flatten;
      else if (sync.text == "Desync")
        stream.synchronicity = Synchronicity::Desync;
      else if (sync.text == "FlatDesync")
        stream.synchronicity = Synchronicity::FlatDesync;
      else fail("E001", "bad synchronicity", sync.span);
      expect(IrToken::Kind::RParen, "')'");
      return make_type(LogicalType{std::move(stream)});
    }
    auto it = type_table_.find(t.text);
    if (it == type_table_.end())
      fail("E001", "unknown type name '" + t.text + "' in IR", t.span);
    return it->second;
  }

  void read_alias() {
    advance();  // 'alias'
    const std::string name = expect(IrToken::Kind::Ident, "alias name").text;
    expect(IrToken::Kind::Assign, "'='");
    LogicalTypeRef referent = read_type_ref();
    TypeIdentity id{"", name, {}, {}};
    LogicalTypeRef named = make_type(LogicalType{AliasType{id, referent}});
    type_table_[name] = named;
    design_.types.push_back(
        NamedTypeDecl{NamedTypeDecl::Kind::Alias, name, id, referent});
  }

  void read_fields(NamedTypeDecl::Kind kind) {
    advance();  // 'group' / 'union'
    const std::string name = expect(IrToken::Kind::Ident, "type name").text;
    expect(IrToken::Kind::LBrace, "'{'");
    std::vector<std::pair<std::string, LogicalTypeRef>> fields;
    while (!accept(IrToken::Kind::RBrace)) {
      std::string field = expect(IrToken::Kind::Ident, "field name").text;
      expect(IrToken::Kind::Colon, "':'");
      fields.emplace_back(std::move(field), read_type_ref());
      expect(IrToken::Kind::Comma, "','");
    }
    TypeIdentity id{"", name, {}, {}};
    LogicalTypeRef named =
        kind == NamedTypeDecl::Kind::Group
            ? make_type(LogicalType{GroupType{id, fields}})
            : make_type(LogicalType{UnionType{id, fields}});
    type_table_[name] = named;
    design_.types.push_back(NamedTypeDecl{kind, name, id, named});
  }

  void read_streamlet() {
    advance();  // 'streamlet'
    ElaboratedStreamlet s;
    s.emit_name = expect(IrToken::Kind::Ident, "streamlet name").text;
    s.identity = TypeIdentity{"", s.emit_name, {}, {}};
    expect(IrToken::Kind::LBrace, "'{'");
    while (!accept(IrToken::Kind::RBrace)) {
      expect_keyword("port");
      ElaboratedPort p;
      p.span = peek().span;
      p.name = expect(IrToken::Kind::Ident, "port name").text;
      if (accept(IrToken::Kind::LBracket)) {
        p.index = read_int("port index");
        expect(IrToken::Kind::RBracket, "']'");
      }
      expect(IrToken::Kind::Colon, "':'");
      p.stream = read_type_ref();
      const IrToken& dir = expect(IrToken::Kind::Ident, "direction");
      if (dir.text == "in") p.direction = PortDirection::In;
      else if (dir.text == "out") p.direction = PortDirection::Out;
      else fail("E001", "bad port direction", dir.span);
      expect(IrToken::Kind::At, "'@'");
      p.clock_domain = expect(IrToken::Kind::String, "clock domain").text;
      expect(IrToken::Kind::Comma, "','");
      s.ports.push_back(std::move(p));
    }
    design_.streamlets.push_back(std::move(s));
  }

  Endpoint read_endpoint() {
    Endpoint ep;
    const IrToken& owner = expect(IrToken::Kind::Ident, "endpoint");
    ep.span = owner.span;
    if (owner.text == "self") {
      ep.self = true;
    } else {
      ep.self = false;
      ep.instance = owner.text;
      if (accept(IrToken::Kind::LBracket)) {
        ep.instance_index = read_int("instance index");
        expect(IrToken::Kind::RBracket, "']'");
      }
    }
    expect(IrToken::Kind::Dot, "'.'");
    ep.port = expect(IrToken::Kind::Ident, "port name").text;
    if (accept(IrToken::Kind::LBracket)) {
      ep.port_index = read_int("port index");
      expect(IrToken::Kind::RBracket, "']'");
    }
    return ep;
  }

  void read_impl() {
    ElaboratedImpl impl;
    if (accept_keyword("external")) impl.external = true;
    expect_keyword("impl");
    impl.emit_name = expect(IrToken::Kind::Ident, "impl name").text;
    impl.identity = TypeIdentity{"", impl.emit_name, {}, {}};
    expect_keyword("of");
    const std::string sname =
        expect(IrToken::Kind::Ident, "streamlet name").text;
    impl.streamlet = TypeIdentity{"", sname, {}, {}};
    if (accept_keyword("intrinsic")) {
      const IrToken& what = expect(IrToken::Kind::Ident, "intrinsic kind");
      if (what.text == "duplicator") impl.intrinsic = IntrinsicKind::Duplicator;
      else if (what.text == "voider") impl.intrinsic = IntrinsicKind::Voider;
      else fail("E001", "unknown intrinsic kind", what.span);
    }
    expect(IrToken::Kind::LBrace, "'{'");
    while (!accept(IrToken::Kind::RBrace)) {
      if (accept_keyword("instance")) {
        ElaboratedInstance inst;
        inst.span = peek().span;
        inst.name = expect(IrToken::Kind::Ident, "instance name").text;
        if (accept(IrToken::Kind::LBracket)) {
          inst.index = read_int("instance index");
          expect(IrToken::Kind::RBracket, "']'");
        }
        expect(IrToken::Kind::Colon, "':'");
        inst.impl = TypeIdentity{
            "", expect(IrToken::Kind::Ident, "impl name").text, {}, {}};
        expect(IrToken::Kind::Comma, "','");
        impl.instances.push_back(std::move(inst));
      } else if (accept_keyword("connect")) {
        ElaboratedConnection conn;
        conn.span = peek().span;
        conn.src = read_endpoint();
        expect(IrToken::Kind::Arrow, "'=>'");
        conn.dst = read_endpoint();
        if (accept_keyword("relax")) conn.relax = true;
        expect(IrToken::Kind::Comma, "','");
        impl.connections.push_back(std::move(conn));
      } else {
        fail("E001", "expected 'instance' or 'connect' in IR impl",
             peek().span);
      }
    }
    design_.impls.push_back(std::move(impl));
  }

  std::vector<IrToken> tokens_;
  size_t pos_ = 0;
  ElaboratedDesign design_;
  std::map<std::string, LogicalTypeRef> type_table_;
};

}  // namespace

ElaboratedDesign read_ir(const std::string& text, FileId file) {
  return IrReader(IrLexer(text, file).run()).run();
}

}  // namespace tydic
