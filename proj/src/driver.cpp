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

#include "tydic/driver.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "tydic/elaborate.hpp"
#include "tydic/ir.hpp"
#include "tydic/parser.hpp"
#include "tydic/stdlib.hpp"
#include "tydic/sugar.hpp"
#include "tydic/vhdl.hpp"

namespace tydic {

namespace fs = std::filesystem;

namespace {

class Stage {
 public:
  Stage(std::ostream& log, bool verbose) : log_(log), verbose_(verbose) {}
  void operator()(const char* name) {
    if (verbose_) log_ << "[tydic] stage " << name << "\n";
  }

 private:
  std::ostream& log_;
  bool verbose_;
};

bool read_file(const fs::path& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

std::string normalize(const fs::path& p) {
  return p.lexically_normal().generic_string();
}

/// The shared middle of the pipeline, from parsed sources onward.
void run_pipeline(CompileResult& result, std::vector<Ast>& asts,
                  const BuildConfig& config, Stage& stage, std::ostream& log) {
  // resolve
  stage("resolve");
  ParseResult builtin = parse(stdlib_source(),
                              result.sources.find(stdlib_file_name()));
  if (!builtin.ast) {
    result.exit_code = 2;
    result.io_error = "internal: builtin library failed to parse";
    result.diagnostics.append(builtin.diagnostics);
    return;
  }
  std::vector<const Ast*> file_ptrs;
  for (const auto& ast : asts) file_ptrs.push_back(&ast);
  ResolveResult scopes = resolve(result.sources, &*builtin.ast, file_ptrs);
  result.diagnostics.append(scopes.diagnostics);
  if (scopes.diagnostics.has_errors()) {
    result.exit_code = 1;
    return;
  }

  // elaborate
  stage("elaborate");
  ElaborateOptions opts;
  opts.template_depth = config.template_depth;
  Elaborator elab(result.sources, scopes, opts);
  TypeIdentity top;
  try {
    top = elab.instantiate_top(config.top);
  } catch (const CompileError& err) {
    result.diagnostics.add(err.diag());
    result.exit_code = 1;
    return;
  }

  // sugar
  stage("sugar");
  if (config.sugaring) apply_sugaring(elab);

  result.design = elab.finish(top);
  result.design_valid = true;

  // drc
  stage("drc");
  DiagnosticList drc = run_drc(result.design, config.drc_mode);
  result.diagnostics.append(drc);
  if (drc.has_errors()) {
    result.exit_code = 1;
    return;
  }

  result.exit_code = 0;
  (void)log;
}

void write_artifacts(CompileResult& result, const BuildConfig& config,
                     Stage& stage) {
  stage("emit");
  std::error_code ec;
  fs::create_directories(config.outdir, ec);
  if (ec) {
    result.exit_code = 2;
    result.io_error = "cannot create output directory '" + config.outdir +
                      "': " + ec.message();
    return;
  }
  auto write = [&](const std::string& name, const std::string& text) {
    fs::path path = fs::path(config.outdir) / name;
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
      result.exit_code = 2;
      result.io_error = "cannot write '" + path.string() + "'";
      return false;
    }
    result.outputs.push_back(path.string());
    return true;
  };
  if (config.emit == EmitKind::Ir || config.emit == EmitKind::Both) {
    if (!write(result.design.top + ".tir", emit_ir(result.design))) return;
  }
  if (config.emit == EmitKind::Vhdl || config.emit == EmitKind::Both) {
    for (const auto& file : emit_vhdl(result.design))
      if (!write(file.name, file.text)) return;
  }
}

}  // namespace

CompileResult compile_strings(
    const std::vector<std::pair<std::string, std::string>>& files,
    const BuildConfig& config, std::ostream& log) {
  CompileResult result;
  Stage stage(log, config.verbose);
  result.sources.add(stdlib_file_name(), stdlib_source());

  stage("parse");
  std::vector<Ast> asts;
  for (const auto& [name, text] : files) {
    FileId id = result.sources.add(name, text);
    ParseResult parsed = parse(text, id);
    result.diagnostics.append(parsed.diagnostics);
    if (parsed.ast) asts.push_back(std::move(*parsed.ast));
  }
  if (result.diagnostics.has_errors()) {
    result.exit_code = 1;
    return result;
  }
  run_pipeline(result, asts, config, stage, log);
  return result;
}

CompileResult compile(const BuildConfig& config, std::ostream& log) {
  CompileResult result;
  Stage stage(log, config.verbose);
  result.sources.add(stdlib_file_name(), stdlib_source());

  // Gather inputs: files as given, directories glob *.td lexicographically.
  std::vector<std::string> roots;
  for (const auto& input : config.inputs) {
    fs::path p(input);
    std::error_code ec;
    if (fs::is_directory(p, ec)) {
      std::vector<std::string> found;
      for (const auto& entry : fs::directory_iterator(p, ec)) {
        if (entry.path().extension() == ".td")
          found.push_back(normalize(entry.path()));
      }
      if (ec) {
        result.io_error = "cannot read directory '" + input + "'";
        return result;
      }
      std::sort(found.begin(), found.end());
      roots.insert(roots.end(), found.begin(), found.end());
    } else if (fs::exists(p, ec)) {
      roots.push_back(normalize(p));
    } else {
      result.io_error = "input '" + input + "' does not exist";
      return result;
    }
  }
  if (roots.empty()) {
    result.io_error = "no input files";
    return result;
  }

  stage("parse");
  std::vector<Ast> asts;
  std::set<std::string> loaded;
  std::vector<std::string> queue = roots;
  while (!queue.empty()) {
    std::string name = queue.front();
    queue.erase(queue.begin());
    if (!loaded.insert(name).second) continue;
    std::string text;
    if (!read_file(name, text)) {
      result.io_error = "cannot read '" + name + "'";
      return result;
    }
    FileId id = result.sources.add(name, text);
    ParseResult parsed = parse(text, id);
    result.diagnostics.append(parsed.diagnostics);
    if (!parsed.ast) continue;
    // Imports are relative to the importing file; rewrite them to the
    // normalized name the resolver will look up, and queue them for loading.
    for (auto& decl : parsed.ast->decls) {
      auto* import = std::get_if<ImportDecl>(&decl.node);
      if (import == nullptr) continue;
      std::string target =
          normalize(fs::path(name).parent_path() / import->path);
      import->path = target;
      if (!loaded.count(target)) queue.push_back(target);
    }
    asts.push_back(std::move(*parsed.ast));
  }
  if (result.diagnostics.has_errors()) {
    result.exit_code = 1;
    return result;
  }

  run_pipeline(result, asts, config, stage, log);
  if (result.exit_code == 0) write_artifacts(result, config, stage);
  return result;
}

std::optional<std::map<std::string, std::string>> parse_config_file(
    const std::string& path, std::string& error) {
  std::string text;
  if (!read_file(path, text)) {
    error = "cannot read config file '" + path + "'";
    return std::nullopt;
  }
  static const std::set<std::string> known = {
      "top", "drc", "emit", "outdir", "sugar", "template_depth", "verbose"};
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    size_t eq = line.find('=', start);
    if (eq == std::string::npos) {
      error = path + ":" + std::to_string(lineno) + ": expected key=value";
      return std::nullopt;
    }
    auto trim = [](std::string s) {
      size_t a = s.find_first_not_of(" \t\r");
      size_t b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string key = trim(line.substr(start, eq - start));
    std::string value = trim(line.substr(eq + 1));
    if (!known.count(key)) {
      error = path + ":" + std::to_string(lineno) + ": unknown key '" + key +
              "'";
      return std::nullopt;
    }
    out[key] = value;
  }
  return out;
}

}  // namespace tydic
