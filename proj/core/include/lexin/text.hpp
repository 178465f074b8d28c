// Copyright 2026 The Authors.
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
#include <string_view>
#include <vector>

#include "lexin/hierarchy.hpp"

namespace lexin {

struct Diagnostic {
  int line = 0;    // 1-based
  int column = 0;  // 1-based
  std::string message;

  std::string to_string() const;
};

/// Parsing failed; diagnostics() lists every problem found, not only the
/// first, in source order.
class ParseError : public Error {
 public:
  explicit ParseError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

struct ObjectBlock {
  std::string name;
  FeatureSet features;  // may pin attributes to the unknown value
};

/// One parsed source: the class hierarchy plus the object blocks, each in
/// declaration order.
struct HierarchyDocument {
  Hierarchy hierarchy;
  std::vector<ObjectBlock> objects;

  const ObjectBlock* find_object(std::string_view name) const;

  /// The named object completed over the attributes of the hierarchy plus
  /// its own. Throws Error when no such object exists.
  ObjectSpec object_spec(std::string_view name) const;
};

/// Grammar, line oriented only in spirit; whitespace is free-form:
///
///   document := (class | object)*
///   class    := "class" NAME (":" NAME+)? "{" feature* "}"
///   object   := "object" NAME "{" feature* "}"
///   feature  := NAME "=" (NAME | "?")
///
/// "#" starts a comment running to the end of the line. "?" is valid only
/// inside object blocks. The parser recovers at the next block and reports
/// every diagnostic at once.
HierarchyDocument parse(std::string_view text);

/// Canonical text: two-space indent, one feature per line in attribute
/// order, single spaces around "=", classes before objects, declaration
/// order preserved. parse(render(parse(x))) == parse(x).
std::string render(const HierarchyDocument& doc);

}  // namespace lexin
