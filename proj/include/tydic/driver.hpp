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

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tydic/design.hpp"
#include "tydic/drc.hpp"
#include "tydic/scope.hpp"

namespace tydic {

enum class EmitKind { Ir, Vhdl, Both };

struct BuildConfig {
  std::vector<std::string> inputs;  // .td files or directories of them
  std::string top;
  DrcMode drc_mode = DrcMode::Strict;
  bool sugaring = true;
  EmitKind emit = EmitKind::Both;
  std::string outdir = ".";
  int64_t template_depth = 64;
  bool verbose = false;
};

/// Exit statuses: 0 clean, 1 any language error (E-codes), 2 I/O or
/// configuration trouble.
struct CompileResult {
  int exit_code = 2;
  DiagnosticList diagnostics;
  SourceManager sources;
  ElaboratedDesign design;
  bool design_valid = false;
  std::vector<std::string> outputs;  // files written
  std::string io_error;              // set when exit_code == 2
};

/// Full pipeline from disk: parse -> resolve -> elaborate -> sugar -> DRC ->
/// emit, in that fixed order (observable via `verbose` stage logs).
CompileResult compile(const BuildConfig& config, std::ostream& log);

/// In-memory variant for tests and tools: (file name, text) pairs; imports
/// match file names exactly. No artifacts are written.
CompileResult compile_strings(
    const std::vector<std::pair<std::string, std::string>>& files,
    const BuildConfig& config, std::ostream& log);

/// Plain `key=value` config file (one per line, `#` comments). Unknown keys
/// are errors. Returns the parsed map or an error message.
std::optional<std::map<std::string, std::string>> parse_config_file(
    const std::string& path, std::string& error);

}  // namespace tydic
