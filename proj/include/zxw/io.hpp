// Copyright 2026 The zxwkit Authors
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

#include "zxw/diagram.hpp"

namespace zxw {

/// JSON form:
///
///   {"nodes":[{"id":0,"kind":"zbox","a":[re,im],"arity":[n_in,n_out]}, ...],
///    "edges":[[[id,port],[id,port]], ...], "inputs":[ids], "outputs":[ids]}
///
/// `kind` is one of zbox, had, w, in, out. Optional per-node fields: "t"
/// (phase rate of a symbolic label) and "tag".
std::string to_json(const Diagram& d, int indent = -1);
/// Inverse of to_json. Throws ParseError on malformed input.
Diagram diagram_from_json(std::string_view text);

/// Graphviz rendering. Z-boxes are labelled boxes, Hadamards yellow squares,
/// W nodes black triangles.
std::string to_dot(const Diagram& d);

/// Tab separated rows, entries written as `re+imj`.
std::string format_matrix(const Matrix& m);
/// Reads the text form back; any whitespace separates entries. A single
/// column is a state vector.
Matrix parse_matrix(std::string_view text);

/// Whole file as a string. Throws Error when it cannot be read.
std::string read_file(const std::string& path);

}  // namespace zxw
