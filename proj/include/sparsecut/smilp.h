// Copyright 2026 The sparsecut Authors
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

#ifndef SPARSECUT_SMILP_H_
#define SPARSECUT_SMILP_H_

#include <iosfwd>
#include <optional>
#include <string>

#include "sparsecut/instance.h"

namespace sparsecut {

// Contents of one SMILP v1 file.
struct SmilpDocument {
  Instance instance;
  std::optional<BlockPartition> col_blocks;
  std::optional<BlockPartition> row_blocks;
};

// Throws ParseError (with line) or InvariantError (naming row or column).
SmilpDocument ParseSmilp(std::istream& in);
SmilpDocument ParseSmilp(const std::string& text);
SmilpDocument LoadInstance(const std::string& path);

// Canonical text. Throws DomainError for instances the format cannot express
// (hull constraints, integer upper bounds other than 1 or +infinity, nonzero
// continuous upper bounds).
std::string FormatSmilp(const SmilpDocument& doc);
void SaveInstance(const SmilpDocument& doc, const std::string& path);

}  // namespace sparsecut

#endif  // SPARSECUT_SMILP_H_
