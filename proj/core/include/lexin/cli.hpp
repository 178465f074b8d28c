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

#include <iosfwd>
#include <string>
#include <vector>

#include "lexin/insertion.hpp"

namespace lexin::cli {

/// Full command line driver. args[0] is the program name. Exit codes:
/// 0 success, 1 diagnostics or failed validation, 2 usage errors,
/// 3 guard rejections (search or weighting limits).
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

/// One-line entry form, optionally followed by '#'-prefixed trace lines:
///   give : TRANSITIVE 3-1 { iobj/cat = N } # cost 3
std::string render_entry_text(const InsertionResult& r, bool include_trace);

/// JSON form of an insertion result. Lossless together with
/// parse_entry_json, trace included.
std::string render_entry_json(const InsertionResult& r, bool include_trace);

/// Inverse of render_entry_json. Throws Error on malformed input.
InsertionResult parse_entry_json(const std::string& text);

}  // namespace lexin::cli
