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

#include "tydic/diagnostic.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace tydic {

void DiagnosticList::sort() {
  std::stable_sort(diags_.begin(), diags_.end(),
                   [](const Diagnostic& a, const Diagnostic& b) {
                     return std::tie(a.span.file, a.span.line, a.span.column,
                                     a.code, a.message) <
                            std::tie(b.span.file, b.span.line, b.span.column,
                                     b.code, b.message);
                   });
}

std::string DiagnosticList::render(const SourceManager& sm) const {
  std::ostringstream out;
  for (const auto& d : diags_) {
    const char* sev = d.severity == Severity::Error ? "error" : "warning";
    std::string file = "<none>";
    if (d.span.file != kNoFile &&
        d.span.file < static_cast<FileId>(sm.file_count()))
      file = sm.name(d.span.file);
    out << file << ':' << d.span.line << ':' << d.span.column << ": " << sev
        << '[' << d.code << "]: " << d.message << '\n';
  }
  return out.str();
}

}  // namespace tydic
