// Copyright 2026 The egverify Authors
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

// Text formats for graphs.
//
// Edge list: a header record "n=<order>" followed by one "i j" record per
// edge. Records are separated by newlines or ';'. Blank records and records
// starting with '#' are ignored. Output lists each edge once with i < j in
// lexicographic order.
//
// graph6: the standard compact format. N(n) is one byte n+63 for n <= 62 and
// '~' followed by three 6-bit bytes otherwise; then the bits x(0,1), x(0,2),
// x(1,2), x(0,3), ... of the upper triangle, packed six per byte (most
// significant first), each byte offset by 63 and the last one zero-padded.

#pragma once

#include <charconv>
#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "egverify/graph.hpp"

namespace egv::io {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline bool parse_int(std::string_view s, int& out) {
  s = trim(s);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace detail

inline std::string emit_edge_list(const Graph& g) {
  std::string out = "n=" + std::to_string(g.order()) + "\n";
  for (auto [i, j] : g.edges()) out += std::to_string(i) + " " + std::to_string(j) + "\n";
  return out;
}

inline Graph parse_edge_list(std::string_view text) {
  std::optional<Graph> g;
  int line = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find_first_of(";\n", pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view rec = detail::trim(text.substr(pos, end - pos));
    int rec_line = line;
    if (end < text.size() && text[end] == '\n') ++line;
    pos = end + 1;

    if (rec.empty() || rec.front() == '#') continue;
    if (!g) {
      int n = 0;
      if (rec.substr(0, 2) != "n=" || !detail::parse_int(rec.substr(2), n)) {
        throw ParseError(rec_line, "expected header 'n=<order>', got '" + std::string(rec) + "'");
      }
      if (n < 0 || n > kMaxVertices) {
        throw ParseError(rec_line, "order " + std::to_string(n) + " outside [0, " + std::to_string(kMaxVertices) + "]");
      }
      g.emplace(n);
      continue;
    }
    std::size_t gap = rec.find_first_of(" \t");
    int i = 0;
    int j = 0;
    if (gap == std::string_view::npos || !detail::parse_int(rec.substr(0, gap), i) ||
        !detail::parse_int(rec.substr(gap + 1), j)) {
      throw ParseError(rec_line, "expected 'i j', got '" + std::string(rec) + "'");
    }
    if (i < 0 || j < 0 || i >= g->order() || j >= g->order()) {
      throw ParseError(rec_line, "vertex index out of range in '" + std::string(rec) + "'");
    }
    if (i == j) throw ParseError(rec_line, "self-loop at vertex " + std::to_string(i));
    if (g->has_edge(i, j)) throw ParseError(rec_line, "duplicate edge '" + std::string(rec) + "'");
    g->add_edge(i, j);
  }
  if (!g) throw ParseError(line, "missing header 'n=<order>'");
  return *g;
}

inline std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  text = detail::trim(text);
  while (!text.empty() && text.back() == '\n') text = detail::trim(text.substr(0, text.size() - 1));
  if (text.substr(0, 10) == ">>graph6<<") text.remove_prefix(10);
  for (std::size_t p = 0; p < text.size(); ++p) {
    auto c = static_cast<unsigned char>(text[p]);
    if (c < 63 || c > 126) {
      throw ParseError(1, "byte " + std::to_string(c) + " at offset " + std::to_string(p) + " outside [63, 126]");
    }
  }
  if (text.empty()) throw ParseError(1, "empty graph6 string");

  std::size_t pos = 0;
  int n = 0;
  if (text[0] != '~') {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == '~') throw ParseError(1, "unsupported graph6 size prefix");
    n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
    pos = 4;
  }
  if (n > kMaxVertices) throw ParseError(1, "order " + std::to_string(n) + " exceeds capacity");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (text.size() - pos != expected) {
    throw ParseError(1, "expected " + std::to_string(expected) + " adjacency bytes, got " +
                            std::to_string(text.size() - pos));
  }
  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

/// Plain DOT dump, no layout attributes.
inline std::string emit_dot(const Graph& g, std::string_view name = "G") {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (auto [i, j] : g.edges()) out << "  " << i << " -- " << j << ";\n";
  out << "}\n";
  return out.str();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Parses either format: graph6 when the first non-comment line has no
/// spaces and no '=', the edge list otherwise.
inline Graph parse_any(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view rec = detail::trim(text.substr(pos, end - pos));
    if (!rec.empty() && rec.front() != '#') {
      bool looks_g6 = rec.find_first_of(" =;") == std::string_view::npos;
      return looks_g6 ? parse_graph6(rec) : parse_edge_list(text);
    }
    pos = end + 1;
  }
  throw ParseError(1, "no graph in input");
}

}  // namespace egv::io
