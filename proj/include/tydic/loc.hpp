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

#include <cstdint>
#include <string>

namespace tydic {

enum class CommentStyle {
  Vhdl,      // `--` line comments
  TydiLang,  // `//` line and `/* */` block comments
};

/// Non-blank, non-comment-only lines. The one counting rule used everywhere
/// the line-of-code metrics appear.
int64_t loc_count(const std::string& text, CommentStyle style);

/// Sums loc_count over every file with the given extension under `dir`
/// (recursive, deterministic order). Throws std::runtime_error when the
/// directory or a file cannot be read.
int64_t loc_count_dir(const std::string& dir, const std::string& extension,
                      CommentStyle style);

struct LocReport {
  int64_t loc_q = 0;     // query logic
  int64_t loc_f = 0;     // memory-interface (Fletcher-style) part
  int64_t loc_s = 0;     // standard library part
  int64_t loc_a = 0;     // loc_q + loc_f + loc_s
  int64_t loc_vhdl = 0;  // generated VHDL
  double r_q = 0;        // loc_vhdl / loc_q
  double r_a = 0;        // loc_vhdl / loc_a
};

/// Ratios from raw counts. Throws std::runtime_error on a zero denominator
/// (reported as an error, never printed as infinity).
LocReport make_loc_report(int64_t loc_q, int64_t loc_f, int64_t loc_s,
                          int64_t loc_vhdl);

/// Two decimals, round half up.
std::string format_ratio(double v);

std::string format_loc_report(const LocReport& report);

}  // namespace tydic
