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

#include <sstream>
#include <string>

#include "tydic/driver.hpp"

namespace tydic::testing {

inline std::string corpus_path(const std::string& rel) {
  return std::string(TYDIC_CORPUS_DIR) + "/" + rel;
}

inline std::string fresh_outdir() {
  static int counter = 0;
  return "tydic_test_out/run" + std::to_string(counter++);
}

inline CompileResult compile_corpus(const std::string& rel,
                                    const std::string& top,
                                    bool sugaring = true,
                                    DrcMode mode = DrcMode::Strict,
                                    EmitKind emit = EmitKind::Ir) {
  BuildConfig config;
  config.inputs = {corpus_path(rel)};
  config.top = top;
  config.sugaring = sugaring;
  config.drc_mode = mode;
  config.emit = emit;
  config.outdir = fresh_outdir();
  std::ostringstream log;
  return compile(config, log);
}

inline CompileResult compile_one(const std::string& text,
                                 const std::string& top, bool sugaring = true,
                                 DrcMode mode = DrcMode::Strict) {
  BuildConfig config;
  config.top = top;
  config.sugaring = sugaring;
  config.drc_mode = mode;
  std::ostringstream log;
  return compile_strings({{"main.td", text}}, config, log);
}

}  // namespace tydic::testing
