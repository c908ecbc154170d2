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

#include "tydic/lexer.hpp"

#include <cctype>
#include <unordered_map>

namespace tydic {

namespace {

const std::unordered_map<std::string, Tok>& keyword_table() {
  static const std::unordered_map<std::string, Tok> table = {
      {"type", Tok::KwType},       {"Group", Tok::KwGroup},
      {"Union", Tok::KwUnion},     {"Bit", Tok::KwBit},
      {"Null", Tok::KwNull},       {"Stream", Tok::KwStream},
      {"streamlet", Tok::KwStreamlet}, {"impl", Tok::KwImpl},
      {"external", Tok::KwExternal},   {"instance", Tok::KwInstance},
      {"for", Tok::KwFor},         {"in", Tok::KwIn},
      {"if", Tok::KwIf},           {"assert", Tok::KwAssert},
      {"int", Tok::KwInt},         {"float", Tok::KwFloat},
      {"string", Tok::KwString},   {"bool", Tok::KwBool},
      {"clockdomain", Tok::KwClockdomain}, {"of", Tok::KwOf},
      {"true", Tok::KwTrue},       {"false", Tok::KwFalse},
      {"import", Tok::KwImport},
  };
  return table;
}

class Lexer {
 public:
  Lexer(const std::string& text, FileId file) : text_(text), file_(file) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_trivia();
      Token t = next();
      out.push_back(t);
      if (t.kind == Tok::End) break;
    }
    return out;
  }

 private:
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

  SourceSpan span_here(uint32_t length) const {
    return SourceSpan{file_, line_, col_, length};
  }

  void skip_trivia() {
    for (;;) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (peek() != '\n' && peek() != '\0') advance();
      } else if (c == '/' && peek(1) == '*') {
        SourceSpan start = span_here(2);
        advance();
        advance();
        while (!(peek() == '*' && peek(1) == '/')) {
          if (peek() == '\0') fail("E001", "unterminated block comment", start);
          advance();
        }
        advance();
        advance();
      } else {
        return;
      }
    }
  }

  Token make(Tok kind, SourceSpan span, std::string text = {}) {
    return Token{kind, std::move(text), span};
  }

  Token next() {
    if (pos_ >= text_.size()) return make(Tok::End, span_here(0));
    SourceSpan start = span_here(1);
    char c = peek();

    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
      return identifier();
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (c == '"') return string_lit();

    advance();
    switch (c) {
      case '{': return make(Tok::LBrace, start);
      case '}': return make(Tok::RBrace, start);
      case '(': return make(Tok::LParen, start);
      case ')': return make(Tok::RParen, start);
      case '[': return make(Tok::LBracket, start);
      case ']': return make(Tok::RBracket, start);
      case ',': return make(Tok::Comma, start);
      case ';': return make(Tok::Semi, start);
      case ':': return make(Tok::Colon, start);
      case '.': return make(Tok::Dot, start);
      case '@': return make(Tok::At, start);
      case '+': return make(Tok::Plus, start);
      case '*': return make(Tok::Star, start);
      case '/': return make(Tok::Slash, start);
      case '^': return make(Tok::Caret, start);
      case '-':
        if (peek() == '>') {
          advance();
          start.length = 2;
          return make(Tok::Arrow, start);
        }
        return make(Tok::Minus, start);
      case '=':
        if (peek() == '=') {
          advance();
          start.length = 2;
          return make(Tok::EqEq, start);
        }
        if (peek() == '>') {
          advance();
          start.length = 2;
          return make(Tok::FatArrow, start);
        }
        return make(Tok::Assign, start);
      case '!':
        if (peek() == '=') {
          advance();
          start.length = 2;
          return make(Tok::NotEq, start);
        }
        return make(Tok::Bang, start);
      case '<':
        if (peek() == '=') {
          advance();
          start.length = 2;
          return make(Tok::Le, start);
        }
        return make(Tok::Lt, start);
      case '>':
        if (peek() == '=') {
          advance();
          start.length = 2;
          return make(Tok::Ge, start);
        }
        return make(Tok::Gt, start);
      case '&':
        if (peek() == '&') {
          advance();
          start.length = 2;
          return make(Tok::AndAnd, start);
        }
        fail("E001", "stray '&' (did you mean '&&'?)", start);
      case '|':
        if (peek() == '|') {
          advance();
          start.length = 2;
          return make(Tok::OrOr, start);
        }
        fail("E001", "stray '|' (did you mean '||'?)", start);
      default:
        fail("E001", std::string("unexpected character '") + c + "'", start);
    }
  }

  Token identifier() {
    SourceSpan start = span_here(0);
    std::string text;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
      text.push_back(advance());
    start.length = static_cast<uint32_t>(text.size());
    auto it = keyword_table().find(text);
    if (it != keyword_table().end()) return make(it->second, start, text);
    return make(Tok::Ident, start, text);
  }

  Token number() {
    SourceSpan start = span_here(0);
    std::string text;
    while (std::isdigit(static_cast<unsigned char>(peek())))
      text.push_back(advance());
    bool is_float = false;
    // '.' only starts a fraction when a digit follows; `0-1->4` keeps working
    // and `inst.port` never lexes a float.
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      is_float = true;
      text.push_back(advance());
      while (std::isdigit(static_cast<unsigned char>(peek())))
        text.push_back(advance());
    }
    if (peek() == 'e' || peek() == 'E') {
      size_t ahead = 1;
      if (peek(1) == '+' || peek(1) == '-') ahead = 2;
      if (std::isdigit(static_cast<unsigned char>(peek(ahead)))) {
        is_float = true;
        for (size_t i = 0; i < ahead; ++i) text.push_back(advance());
        while (std::isdigit(static_cast<unsigned char>(peek())))
          text.push_back(advance());
      }
    }
    start.length = static_cast<uint32_t>(text.size());
    return make(is_float ? Tok::FloatLit : Tok::IntLit, start, text);
  }

  Token string_lit() {
    SourceSpan start = span_here(1);
    advance();  // opening quote
    std::string text;
    for (;;) {
      char c = peek();
      if (c == '\0' || c == '\n')
        fail("E001", "unterminated string literal", start);
      advance();
      if (c == '"') break;
      if (c == '\\') {
        char esc = peek();
        advance();
        switch (esc) {
          case 'n': text.push_back('\n'); break;
          case 't': text.push_back('\t'); break;
          case '"': text.push_back('"'); break;
          case '\\': text.push_back('\\'); break;
          default:
            fail("E001", std::string("unknown escape '\\") + esc + "'", start);
        }
      } else {
        text.push_back(c);
      }
    }
    start.length = static_cast<uint32_t>(text.size()) + 2;
    return make(Tok::StringLit, start, text);
  }

  const std::string& text_;
  FileId file_;
  size_t pos_ = 0;
  uint32_t line_ = 1;
  uint32_t col_ = 1;
};

}  // namespace

const char* token_name(Tok kind) {
  switch (kind) {
    case Tok::End: return "end of file";
    case Tok::Ident: return "identifier";
    case Tok::IntLit: return "integer literal";
    case Tok::FloatLit: return "float literal";
    case Tok::StringLit: return "string literal";
    case Tok::KwType: return "'type'";
    case Tok::KwGroup: return "'Group'";
    case Tok::KwUnion: return "'Union'";
    case Tok::KwBit: return "'Bit'";
    case Tok::KwNull: return "'Null'";
    case Tok::KwStream: return "'Stream'";
    case Tok::KwStreamlet: return "'streamlet'";
    case Tok::KwImpl: return "'impl'";
    case Tok::KwExternal: return "'external'";
    case Tok::KwInstance: return "'instance'";
    case Tok::KwFor: return "'for'";
    case Tok::KwIn: return "'in'";
    case Tok::KwIf: return "'if'";
    case Tok::KwAssert: return "'assert'";
    case Tok::KwInt: return "'int'";
    case Tok::KwFloat: return "'float'";
    case Tok::KwString: return "'string'";
    case Tok::KwBool: return "'bool'";
    case Tok::KwClockdomain: return "'clockdomain'";
    case Tok::KwOf: return "'of'";
    case Tok::KwTrue: return "'true'";
    case Tok::KwFalse: return "'false'";
    case Tok::KwImport: return "'import'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::Colon: return "':'";
    case Tok::Dot: return "'.'";
    case Tok::At: return "'@'";
    case Tok::Assign: return "'='";
    case Tok::FatArrow: return "'=>'";
    case Tok::Arrow: return "'->'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Caret: return "'^'";
    case Tok::EqEq: return "'=='";
    case Tok::NotEq: return "'!='";
    case Tok::Lt: return "'<'";
    case Tok::Le: return "'<='";
    case Tok::Gt: return "'>'";
    case Tok::Ge: return "'>='";
    case Tok::AndAnd: return "'&&'";
    case Tok::OrOr: return "'||'";
    case Tok::Bang: return "'!'";
  }
  return "?";
}

std::vector<Token> lex(const std::string& text, FileId file) {
  return Lexer(text, file).run();
}

}  // namespace tydic
