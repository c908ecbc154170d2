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

#include "tydic/ast.hpp"
#include "tydic/logical_type.hpp"
#include "tydic/scope.hpp"
#include "tydic/value.hpp"

namespace tydic {

/// Evaluates a compile-time expression. Pure up to the declared errors:
/// Int op Int stays Int except `/` (Float when inexact) and `^` with a
/// negative exponent; any Float operand promotes to Float. Throws
/// CompileError (E002/E007/E010) on failure.
Value eval(const Expr& e, Scope& scope);

/// E007 when the expression is false, E010 when it is not a boolean.
void eval_assert(const Expr& e, Scope& scope);

/// Evaluates a written type to a logical type: width/dimension expressions
/// are computed, names resolve through aliases, stream parameters validate
/// (E011). Type template arguments are rejected (E009).
LogicalTypeRef eval_type(const TypeExpr& t, Scope& scope);

/// ceil(log2(n)) computed exactly on the integer's bit length, never through
/// floating point: bitlength(n-1) for n >= 2, 0 for n == 1. Throws E010 for
/// n <= 0.
int64_t ceil_log2(const BigInt& n);

/// floor(log2(n)) = bitlength(n) - 1 for n >= 1; E010 for n <= 0.
int64_t floor_log2(const BigInt& n);

/// Resolves a port's clock-domain annotation. A name bound to a clockdomain
/// value in scope uses that value; an unbound name denotes the domain
/// itself; empty means the reserved `!default` domain.
std::string eval_clock_domain(const std::string& name, Scope& scope,
                              SourceSpan span);

/// Reserved domain for unannotated ports; equal only to itself.
inline const char* default_clock_domain() { return "!default"; }

}  // namespace tydic
