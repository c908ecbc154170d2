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

#include "tydic/design.hpp"
#include "tydic/diagnostic.hpp"

namespace tydic {

enum class DrcMode { Strict, Hierarchy };

/// Validates one connection. At most one diagnostic comes back; the checks
/// run in fixed order (type, direction, clock, complexity) and the first
/// failure wins.
///   E003  type mismatch / direction error / reverse stream
///   E005  clock-domain mismatch
///   E006  protocol complexity incompatibility
DiagnosticList check_connection(const ElaboratedDesign& design,
                                const ElaboratedImpl& impl,
                                const ElaboratedConnection& conn,
                                DrcMode mode);

/// Every port slot of the impl (own ports and each instance's ports) must
/// appear in exactly one connection; E004 otherwise, with the count found.
DiagnosticList check_port_usage(const ElaboratedDesign& design,
                                const ElaboratedImpl& impl);

/// Both rules over every non-external impl. Read-only; diagnostics come
/// back merged in deterministic (file, span, code) order.
DiagnosticList run_drc(const ElaboratedDesign& design, DrcMode mode);

}  // namespace tydic
