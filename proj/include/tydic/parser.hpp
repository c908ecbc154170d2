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

#include <optional>
#include <string>

#include "tydic/ast.hpp"
#include "tydic/diagnostic.hpp"

namespace tydic {

struct ParseResult {
  std::optional<Ast> ast;  // set iff diagnostics carry no error
  DiagnosticList diagnostics;
};

/// Parses one source file. Either a complete Ast comes back or at least one
/// E001 diagnostic; partial trees are never returned.
ParseResult parse(const std::string& text, FileId file);

/// Parses a standalone expression (tests and tooling). Throws CompileError
/// on syntax errors or trailing input.
ExprPtr parse_expression(const std::string& text, FileId file = kNoFile);

}  // namespace tydic
