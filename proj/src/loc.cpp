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

#include "tydic/loc.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace tydic {

int64_t loc_count(const std::string& text, CommentStyle style) {
  int64_t count = 0;
  bool in_block_comment = false;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    bool has_code = false;
    size_t i = pos;
    while (i < eol) {
      char c = text[i];
      if (in_block_comment) {
        if (c == '*' && i + 1 < eol && text[i + 1] == '/') {
          in_block_comment = false;
          i += 2;
          continue;
        }
        ++i;
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r') {
        ++i;
        continue;
      }
      if (style == CommentStyle::Vhdl && c == '-' && i + 1 < eol &&
          text[i + 1] == '-')
        break;  // rest of line is comment
      if (style == CommentStyle::TydiLang && c == '/' && i + 1 < eol) {
        if (text[i + 1] == '/') break;
        if (text[i + 1] == '*') {
          in_block_comment = true;
          i += 2;
          continue;
        }
      }
      has_code = true;
      ++i;
    }
    if (has_code) ++count;
    pos = eol + 1;
  }
  return count;
}

int64_t loc_count_dir(const std::string& dir, const std::string& extension,
                      CommentStyle style) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec))
    throw std::runtime_error("'" + dir + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir, ec))
    if (entry.path().extension() == extension) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  int64_t total = 0;
  for (const auto& path : files) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    total += loc_count(buf.str(), style);
  }
  return total;
}

LocReport make_loc_report(int64_t loc_q, int64_t loc_f, int64_t loc_s,
                          int64_t loc_vhdl) {
  LocReport report;
  report.loc_q = loc_q;
  report.loc_f = loc_f;
  report.loc_s = loc_s;
  report.loc_a = loc_q + loc_f + loc_s;
  report.loc_vhdl = loc_vhdl;
  if (loc_q == 0) throw std::runtime_error("LoC_q is zero; R_q is undefined");
  if (report.loc_a == 0)
    throw std::runtime_error("LoC_a is zero; R_a is undefined");
  report.r_q = static_cast<double>(loc_vhdl) / static_cast<double>(loc_q);
  report.r_a = static_cast<double>(loc_vhdl) / static_cast<double>(report.loc_a);
  return report;
}

std::string format_ratio(double v) {
  // Round half up at two decimals, printed from integer hundredths so no
  // printf rounding mode sneaks in.
  int64_t cents = static_cast<int64_t>(v * 100.0 + 0.5);
  std::string frac = std::to_string(cents % 100);
  if (frac.size() < 2) frac = "0" + frac;
  return std::to_string(cents / 100) + "." + frac;
}

std::string format_loc_report(const LocReport& report) {
  std::ostringstream out;
  out << "LoC_q    = " << report.loc_q << "\n";
  out << "LoC_f    = " << report.loc_f << "\n";
  out << "LoC_s    = " << report.loc_s << "\n";
  out << "LoC_a    = " << report.loc_a << "\n";
  out << "LoC_vhdl = " << report.loc_vhdl << "\n";
  out << "R_q      = " << format_ratio(report.r_q) << "\n";
  out << "R_a      = " << format_ratio(report.r_a) << "\n";
  return out.str();
}

}  // namespace tydic
