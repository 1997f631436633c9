// Copyright 2026 The densematch Authors
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

#ifndef DENSEMATCH_EDGE_LIST_H_
#define DENSEMATCH_EDGE_LIST_H_

#include <filesystem>
#include <iosfwd>
#include <string>

#include "densematch/graph.h"

namespace densematch {

// Text interchange format:
//
//   n m
//   u v      (m lines, 0-indexed)
//
// Tokens are whitespace-separated; everything after '#' on a line is a
// comment. Duplicate edges collapse, so the built graph may have fewer than m
// edges. Throws InputError on malformed input.
Graph ReadEdgeList(std::istream& in);
Graph ReadEdgeListFile(const std::filesystem::path& path);

// Writes the canonical form: header then edges with u < v in sorted order.
void WriteEdgeList(const Graph& g, std::ostream& out);
std::string EdgeListString(const Graph& g);

}  // namespace densematch

#endif  // DENSEMATCH_EDGE_LIST_H_
