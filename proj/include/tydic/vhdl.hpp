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

#include "tydic/design.hpp"

namespace tydic {

/// Physical signal set for one stream port: data (lanes x element width),
/// valid, ready (reversed), last (dimension bits, omitted at d=0) and, for
/// union elements, a separate tag of ceil(log2(#children)) bits. Null
/// elements carry handshake only.
struct PhysicalSignal {
  enum class Role { Data, Valid, Ready, Last, Tag };
  Role role;
  std::string name;
  PortDirection direction;  // from the entity's point of view
  int64_t width = 1;        // vector width; 0 means plain std_logic
};

/// Lane count: ceil(throughput), at least 1.
int64_t lane_count(const StreamType& stream);

/// data bits = lanes * bit_width(element); exactly what the width
/// cross-check in the test suite recomputes.
int64_t data_width(const StreamType& stream);

/// ceil(log2(#children)) when the element resolves to a Union, else 0.
int64_t tag_width(const StreamType& stream);

/// The signal set of a port, names prefixed with the sanitized port name.
std::vector<PhysicalSignal> physical_signals(const ElaboratedPort& port,
                                             const std::string& base);

/// VHDL-legal identifier: alphanumerics and single underscores, starts with
/// a letter. Pure sanitation; uniqueness is the emitter's job.
std::string sanitize_vhdl_name(const std::string& raw);

struct VhdlFile {
  std::string name;  // file name, e.g. "top_i.vhd"
  std::string text;
};

/// One file per impl: an entity named after the impl (port map from its
/// streamlet) plus a structural architecture; external impls get an empty
/// shell with a handshake-contract comment. Deterministic output.
std::vector<VhdlFile> emit_vhdl(const ElaboratedDesign& design);

}  // namespace tydic
