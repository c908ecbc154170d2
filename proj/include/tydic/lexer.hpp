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

#include <string>
#include <vector>

#include "tydic/diagnostic.hpp"

namespace tydic {

enum class Tok {
  End,
  Ident,
  IntLit,
  FloatLit,
  StringLit,
  // keywords
  KwType,
  KwGroup,
  KwUnion,
  KwBit,
  KwNull,
  KwStream,
  KwStreamlet,
  KwImpl,
  KwExternal,
  KwInstance,
  KwFor,
  KwIn,
  KwIf,
  KwAssert,
  KwInt,
  KwFloat,
  KwString,
  KwBool,
  KwClockdomain,
  KwOf,
  KwTrue,
  KwFalse,
  KwImport,
  // punctuation / operators
  LBrace,
  RBrace,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Semi,
  Colon,
  Dot,
  At,
  Assign,   // =
  FatArrow, // =>
  Arrow,    // ->
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  EqEq,
  NotEq,
  Lt,
  Le,
  Gt,
  Ge,
  AndAnd,
  OrOr,
  Bang,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;  // identifier / literal spelling (strings are unescaped)
  SourceSpan span;
};

const char* token_name(Tok kind);

/// Tokenizes a whole file. Throws CompileError (E001) on malformed input
/// (unterminated string or block comment, stray characters).
std::vector<Token> lex(const std::string& text, FileId file);

}  // namespace tydic
