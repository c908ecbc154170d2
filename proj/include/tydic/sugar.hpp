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

#include "tydic/elaborate.hpp"

namespace tydic {

/// Rewires every local source endpoint with fan-out k >= 2 through a fresh
/// duplicator instance (type and output count inferred, outputs in original
/// connection order). Fan-out-1 endpoints stay untouched. Total transform;
/// idempotent.
void insert_duplicators(Elaborator& elab, ElaboratedImpl& impl);

/// Connects every unused local source endpoint to a fresh voider instance.
/// Unused sinks stay untouched: a sink cannot be satisfied by discarding,
/// so the usage check keeps flagging them.
void insert_voiders(Elaborator& elab, ElaboratedImpl& impl);

/// Both transforms over every non-external impl, duplicators first; runs
/// before the design rule check so usage counting sees the rewired graph.
void apply_sugaring(Elaborator& elab);

}  // namespace tydic
