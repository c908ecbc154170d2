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

#include "tydic/design.hpp"

namespace tydic {

/// Renders a finalized design as textual IR (`.tir`): type declarations,
/// then streamlets, then impls, dependencies first, one item per line,
/// 2-space indent. Deterministic: the same design always produces
/// byte-identical text.
std::string emit_ir(const ElaboratedDesign& design);

/// Parses emit_ir output back into a design that is structurally equal to
/// the original. Throws CompileError (E001 codes) on malformed input.
ElaboratedDesign read_ir(const std::string& text, FileId file = kNoFile);

}  // namespace tydic
