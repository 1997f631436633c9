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

#include "densematch/edge_list.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "densematch/error.h"

namespace densematch {
namespace {

// Splits the comment-stripped stream into numeric tokens, remembering the
// line each one came from for error messages.
struct Token {
  std::uint64_t value;
  std::size_t line;
};

std::vector<Token> Tokenize(std::istream& in) {
  std::vector<Token> tokens;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    std::size_t pos = 0;
    while (pos < view.size()) {
      while (pos < view.size() &&
             (view[pos] == ' ' || view[pos] == '\t' || view[pos] == '\r')) {
        ++pos;
      }
      if (pos >= view.size()) break;
      std::size_t end = pos;
      while (end < view.size() && view[end] != ' ' && view[end] != '\t' &&
             view[end] != '\r') {
        ++end;
      }
      std::uint64_t value = 0;
      auto [ptr, ec] =
          std::from_chars(view.data() + pos, view.data() + end, value);
      if (ec != std::errc() || ptr != view.data() + end) {
        throw InputError("line " + std::to_string(line_no) +
                         ": expected a nonnegative integer, got '" +
                         std::string(view.substr(pos, end - pos)) + "'");
      }
      tokens.push_back({value, line_no});
      pos = end;
    }
  }
  return tokens;
}

}  // namespace

Graph ReadEdgeList(std::istream& in) {
  const std::vector<Token> tokens = Tokenize(in);
  if (tokens.size() < 2) throw InputError("missing 'n m' header");
  const std::uint64_t n = tokens[0].value;
  const std::uint64_t m = tokens[1].value;
  if (tokens.size() != 2 + 2 * m) {
    throw InputError("header declares " + std::to_string(m) +
                     " edges but the body holds " +
                     std::to_string((tokens.size() - 2) / 2) +
                     ((tokens.size() % 2 != 0) ? " and a dangling token" : ""));
  }
  if (n > kDefaultMaxVertices) {
    throw InputError("vertex count " + std::to_string(n) +
                     " exceeds the limit");
  }
  GraphBuilder builder(n);
  for (std::size_t i = 0; i < m; ++i) {
    const Token& u = tokens[2 + 2 * i];
    const Token& v = tokens[3 + 2 * i];
    if (u.value >= n || v.value >= n) {
      throw InputError("line " + std::to_string(u.line) + ": vertex out of " +
                       "range for n = " + std::to_string(n));
    }
    try {
      builder.AddEdge(static_cast<VertexId>(u.value),
                      static_cast<VertexId>(v.value));
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(u.line) + ": " + e.what());
    }
  }
  return std::move(builder).Build();
}

Graph ReadEdgeListFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file " + path.string());
  return ReadEdgeList(in);
}

void WriteEdgeList(const Graph& g, std::ostream& out) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.Edges()) out << e.u << ' ' << e.v << '\n';
}

std::string EdgeListString(const Graph& g) {
  std::ostringstream out;
  WriteEdgeList(g, out);
  return out.str();
}

}  // namespace densematch
