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
#include <stdexcept>
#include <string>
#include <vector>

namespace tydic {

using FileId = int32_t;
constexpr FileId kNoFile = -1;

/// Half-open character range inside one source file. Lines and columns are
/// 1-based; a zero-length span points at a position.
struct SourceSpan {
  FileId file = kNoFile;
  uint32_t line = 1;
  uint32_t column = 1;
  uint32_t length = 0;

  bool operator==(const SourceSpan&) const = default;
};

/// Maps FileIds to file names and keeps the source text around so spans can
/// be validated and rendered.
class SourceManager {
 public:
  FileId add(std::string name, std::string text) {
    names_.push_back(std::move(name));
    texts_.push_back(std::move(text));
    return static_cast<FileId>(names_.size() - 1);
  }

  const std::string& name(FileId id) const { return names_.at(id); }
  const std::string& text(FileId id) const { return texts_.at(id); }
  size_t file_count() const { return names_.size(); }

  /// Looks up a previously added file by name, kNoFile if absent.
  FileId find(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<FileId>(i);
    return kNoFile;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::string> texts_;
};

enum class Severity { Error, Warning };

// Codes are stable across releases; new codes append, old ones never change
// meaning.
//   E001 syntax error
//   E002 unresolved name / import cycle / index out of bounds
//   E003 connection type mismatch / direction error / reverse stream
//   E004 port usage count violation
//   E005 clock-domain mismatch
//   E006 protocol complexity incompatibility
//   E007 assertion failed
//   E008 duplicate binding (immutability violation)
//   E009 template arity/kind mismatch / template recursion
//   E010 evaluation error (division by zero, bad range, non-bool cond, ...)
//   E011 invalid width or stream parameter
struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;
  std::string message;
  SourceSpan span;
  std::vector<SourceSpan> related;

  bool is_error() const { return severity == Severity::Error; }
};

/// Thrown by evaluation/elaboration internals; the pipeline boundary catches
/// it and appends the payload to the diagnostic list.
class CompileError : public std::runtime_error {
 public:
  explicit CompileError(Diagnostic diag)
      : std::runtime_error(diag.message), diag_(std::move(diag)) {}

  const Diagnostic& diag() const { return diag_; }

 private:
  Diagnostic diag_;
};

inline Diagnostic make_error(std::string code, std::string message,
                             SourceSpan span) {
  return Diagnostic{Severity::Error, std::move(code), std::move(message), span,
                    {}};
}

[[noreturn]] inline void fail(std::string code, std::string message,
                              SourceSpan span) {
  throw CompileError(make_error(std::move(code), std::move(message), span));
}

class DiagnosticList {
 public:
  void add(Diagnostic d) { diags_.push_back(std::move(d)); }
  void error(std::string code, std::string message, SourceSpan span) {
    add(make_error(std::move(code), std::move(message), span));
  }

  bool has_errors() const {
    for (const auto& d : diags_)
      if (d.is_error()) return true;
    return false;
  }

  size_t error_count() const {
    size_t n = 0;
    for (const auto& d : diags_)
      if (d.is_error()) ++n;
    return n;
  }

  const std::vector<Diagnostic>& all() const { return diags_; }
  bool empty() const { return diags_.empty(); }
  size_t size() const { return diags_.size(); }
  const Diagnostic& operator[](size_t i) const { return diags_[i]; }

  void append(const DiagnosticList& other) {
    for (const auto& d : other.diags_) diags_.push_back(d);
  }

  /// Deterministic merge order: (file, line, column, code, message).
  void sort();

  /// One line per diagnostic: <file>:<line>:<col>: <severity>[<code>]: <msg>
  std::string render(const SourceManager& sm) const;

 private:
  std::vector<Diagnostic> diags_;
};

}  // namespace tydic
