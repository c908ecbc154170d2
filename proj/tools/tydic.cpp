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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tydic/driver.hpp"
#include "tydic/loc.hpp"

namespace fs = std::filesystem;

namespace {

int run_build(tydic::BuildConfig config, const std::string& config_path,
              bool no_sugar_flag, const std::string& drc_flag,
              const std::string& emit_flag) {
  // Plain key=value config file first; explicit flags win.
  if (!config_path.empty()) {
    std::string error;
    auto values = tydic::parse_config_file(config_path, error);
    if (!values) {
      std::cerr << "tydic: " << error << "\n";
      return 2;
    }
    auto get = [&](const char* key) -> const std::string* {
      auto it = values->find(key);
      return it == values->end() ? nullptr : &it->second;
    };
    if (config.top.empty())
      if (const auto* v = get("top")) config.top = *v;
    if (const auto* v = get("outdir"); v && config.outdir == ".")
      config.outdir = *v;
    if (const auto* v = get("sugar")) config.sugaring = *v != "false";
    if (const auto* v = get("drc"))
      config.drc_mode =
          *v == "hierarchy" ? tydic::DrcMode::Hierarchy : tydic::DrcMode::Strict;
    if (const auto* v = get("emit")) {
      if (*v == "ir") config.emit = tydic::EmitKind::Ir;
      else if (*v == "vhdl") config.emit = tydic::EmitKind::Vhdl;
      else config.emit = tydic::EmitKind::Both;
    }
    if (const auto* v = get("template_depth"))
      config.template_depth = std::atoll(v->c_str());
    if (const auto* v = get("verbose")) config.verbose = *v == "true";
  }
  if (no_sugar_flag) config.sugaring = false;
  if (!drc_flag.empty())
    config.drc_mode = drc_flag == "hierarchy" ? tydic::DrcMode::Hierarchy
                                              : tydic::DrcMode::Strict;
  if (!emit_flag.empty()) {
    if (emit_flag == "ir") config.emit = tydic::EmitKind::Ir;
    else if (emit_flag == "vhdl") config.emit = tydic::EmitKind::Vhdl;
    else config.emit = tydic::EmitKind::Both;
  }
  if (const char* env = std::getenv("TYDIC_TEMPLATE_DEPTH"))
    config.template_depth = std::atoll(env);
  if (config.top.empty()) {
    std::cerr << "tydic: no top impl given (--top)\n";
    return 2;
  }

  tydic::CompileResult result = tydic::compile(config, std::cerr);
  tydic::DiagnosticList sorted = result.diagnostics;
  sorted.sort();
  std::cerr << sorted.render(result.sources);
  if (result.exit_code == 2 && !result.io_error.empty())
    std::cerr << "tydic: " << result.io_error << "\n";
  if (result.exit_code == 0 && config.verbose)
    for (const auto& f : result.outputs)
      std::cerr << "[tydic] wrote " << f << "\n";
  return result.exit_code;
}

int run_loc(const std::string& query_dir, const std::string& fletcher_dir,
            const std::string& stdlib_dir, const std::string& vhdl_dir) {
  try {
    int64_t q = tydic::loc_count_dir(query_dir, ".td",
                                     tydic::CommentStyle::TydiLang);
    int64_t f = tydic::loc_count_dir(fletcher_dir, ".td",
                                     tydic::CommentStyle::TydiLang);
    int64_t s = tydic::loc_count_dir(stdlib_dir, ".td",
                                     tydic::CommentStyle::TydiLang);
    int64_t v =
        tydic::loc_count_dir(vhdl_dir, ".vhd", tydic::CommentStyle::Vhdl);
    std::cout << tydic::format_loc_report(tydic::make_loc_report(q, f, s, v));
  } catch (const std::exception& e) {
    std::cerr << "tydic: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tydic: compiler for Tydi-lang typed streaming hardware"};
  app.require_subcommand(1);

  tydic::BuildConfig config;
  std::string config_path;
  std::string drc_flag;
  std::string emit_flag;
  bool no_sugar = false;

  CLI::App* build = app.add_subcommand("build", "compile sources to IR/VHDL");
  build->add_option("inputs", config.inputs, ".td files or directories")
      ->expected(-1);
  build->add_option("--top", config.top, "top-level impl name");
  build->add_flag("--no-sugar", no_sugar,
                  "disable duplicator/voider insertion");
  build->add_option("--drc", drc_flag, "strict (default) or hierarchy")
      ->check(CLI::IsMember({"strict", "hierarchy"}));
  build->add_option("--emit", emit_flag, "ir, vhdl or both (default)")
      ->check(CLI::IsMember({"ir", "vhdl", "both"}));
  build->add_option("--outdir", config.outdir, "output directory");
  build->add_option("--config", config_path, "key=value config file");
  build->add_flag("--verbose", config.verbose, "log pipeline stages");

  std::string query_dir, fletcher_dir, stdlib_dir, vhdl_dir;
  CLI::App* loc = app.add_subcommand("loc", "line-of-code metrics report");
  loc->add_option("--query", query_dir, "query-logic .td directory")
      ->required();
  loc->add_option("--fletcher", fletcher_dir,
                  "memory-interface .td directory")
      ->required();
  loc->add_option("--stdlib", stdlib_dir, "template library .td directory")
      ->required();
  loc->add_option("--vhdl", vhdl_dir, "generated .vhd directory")->required();

  CLI11_PARSE(app, argc, argv);

  if (build->parsed())
    return run_build(std::move(config), config_path, no_sugar, drc_flag,
                     emit_flag);
  return run_loc(query_dir, fletcher_dir, stdlib_dir, vhdl_dir);
}
