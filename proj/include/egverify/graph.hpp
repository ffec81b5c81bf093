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

#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace egv {

using Vertex = int;

/// One adjacency row: bit i set means vertex i is a member.
using VertexSet = std::uint64_t;

/// Maximum number of vertices a Graph can hold (one machine word per row).
inline constexpr int kMaxVertices = 64;

constexpr VertexSet bit(Vertex v) noexcept { return VertexSet{1} << v; }

/// The set {0, ..., n-1}.
constexpr VertexSet prefix_set(int n) noexcept {
  return n >= kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr bool contains(VertexSet s, Vertex v) noexcept { return (s >> v) & 1U; }

constexpr int set_size(VertexSet s) noexcept { return std::popcount(s); }

/// Calls fn(v) for every member v of s in ascending order.
template <typename Fn>
constexpr void for_each_vertex(VertexSet s, Fn&& fn) {
  while (s != 0) {
    fn(static_cast<Vertex>(std::countr_zero(s)));
    s &= s - 1;
  }
}

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows and
/// cached degrees. Vertices can only be appended or removed from the end.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n) {
    if (n < 0 || n > kMaxVertices) {
      throw std::invalid_argument("vertex count " + std::to_string(n) + " outside [0, " +
                                  std::to_string(kMaxVertices) + "]");
    }
    n_ = n;
  }

  int order() const noexcept { return n_; }

  int size() const noexcept {
    int twice = 0;
    for (int i = 0; i < n_; ++i) twice += degree_[i];
    return twice / 2;
  }

  VertexSet neighbors(Vertex v) const noexcept { return adj_[v]; }
  int degree(Vertex v) const noexcept { return degree_[v]; }
  VertexSet vertices() const noexcept { return prefix_set(n_); }

  bool has_edge(Vertex i, Vertex j) const noexcept {
    return in_range(i) && in_range(j) && contains(adj_[i], j);
  }

  Vertex add_vertex() {
    if (n_ >= kMaxVertices) {
      throw std::length_error("graph capacity of " + std::to_string(kMaxVertices) +
                              " vertices exceeded");
    }
    return n_++;
  }

  /// Removes the highest-index vertex, which must be isolated.
  void remove_last_vertex() {
    if (n_ == 0) throw std::logic_error("remove_last_vertex on empty graph");
    if (degree_[n_ - 1] != 0) throw std::logic_error("remove_last_vertex on non-isolated vertex");
    --n_;
  }

  void add_edge(Vertex i, Vertex j) {
    check_pair(i, j);
    if (contains(adj_[i], j)) {
      throw std::logic_error("duplicate edge {" + std::to_string(i) + "," + std::to_string(j) + "}");
    }
    adj_[i] |= bit(j);
    adj_[j] |= bit(i);
    ++degree_[i];
    ++degree_[j];
  }

  void remove_edge(Vertex i, Vertex j) {
    check_pair(i, j);
    if (!contains(adj_[i], j)) {
      throw std::logic_error("missing edge {" + std::to_string(i) + "," + std::to_string(j) + "}");
    }
    adj_[i] &= ~bit(j);
    adj_[j] &= ~bit(i);
    --degree_[i];
    --degree_[j];
  }

  int min_degree() const noexcept {
    int m = n_ == 0 ? 0 : degree_[0];
    for (int i = 1; i < n_; ++i) m = degree_[i] < m ? degree_[i] : m;
    return m;
  }

  int max_degree() const noexcept {
    int m = 0;
    for (int i = 0; i < n_; ++i) m = degree_[i] > m ? degree_[i] : m;
    return m;
  }

  /// Edges {i, j} with i < j in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex i = 0; i < n_; ++i) {
      for_each_vertex(adj_[i] & ~prefix_set(i + 1), [&](Vertex j) { out.emplace_back(i, j); });
    }
    return out;
  }

  /// Subgraph induced by `keep`, relabelled in ascending order.
  Graph induced(VertexSet keep) const {
    keep &= vertices();
    std::array<Vertex, kMaxVertices> index{};
    int m = 0;
    for_each_vertex(keep, [&](Vertex v) { index[v] = m++; });
    Graph h(m);
    for_each_vertex(keep, [&](Vertex v) {
      for_each_vertex(adj_[v] & keep & ~prefix_set(v + 1),
                      [&](Vertex w) { h.add_edge(index[v], index[w]); });
    });
    return h;
  }

  /// Copy with vertex v renamed to perm[v].
  Graph relabeled(const std::vector<Vertex>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
    Graph h(n_);
    for (auto [i, j] : edges()) h.add_edge(perm[i], perm[j]);
    return h;
  }

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    if (a.n_ != b.n_) return false;
    for (int i = 0; i < a.n_; ++i) {
      if (a.adj_[i] != b.adj_[i]) return false;
    }
    return true;
  }

 private:
  bool in_range(Vertex v) const noexcept { return v >= 0 && v < n_; }

  void check_pair(Vertex i, Vertex j) const {
    if (!in_range(i) || !in_range(j)) {
      throw std::out_of_range("vertex pair (" + std::to_string(i) + "," + std::to_string(j) +
                              ") outside graph of order " + std::to_string(n_));
    }
    if (i == j) throw std::invalid_argument("self-loop at vertex " + std::to_string(i));
  }

  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
  std::array<int, kMaxVertices> degree_{};
};

/// The path v_0 v_1 ... v_{k-1}.
inline Graph new_path(int k) {
  if (k < 2) throw std::invalid_argument("path needs at least 2 vertices, got " + std::to_string(k));
  Graph g(k);
  for (Vertex i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph new_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = new_path(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline Graph new_complete(int n) {
  Graph g(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

/// Largest-index vertex of degree at most 2, or nullopt when the minimum degree is >= 3.
inline std::optional<Vertex> get_largest_low_degree_vertex(const Graph& g) noexcept {
  for (Vertex v = g.order() - 1; v >= 0; --v) {
    if (g.degree(v) < 3) return v;
  }
  return std::nullopt;
}

/// Deterministic 64-bit digest of the order and adjacency rows.
inline std::uint64_t fingerprint(const Graph& g) noexcept {
  // splitmix64 finaliser folded over the rows
  auto mix = [](std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  };
  std::uint64_t h = mix(static_cast<std::uint64_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) h = mix(h ^ g.neighbors(v));
  return h;
}

/// Reversible record of graph mutations. Rolling back to a mark restores the
/// graph exactly as it was when the mark was taken.
class MutationLog {
 public:
  using Mark = std::size_t;

  Mark mark() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  Vertex add_vertex(Graph& g) {
    Vertex v = g.add_vertex();
    entries_.push_back({kVertexAdded, v, v});
    return v;
  }

  void add_edge(Graph& g, Vertex i, Vertex j) {
    g.add_edge(i, j);
    entries_.push_back({kEdgeAdded, i, j});
  }

  void rollback_to(Graph& g, Mark m) {
    while (entries_.size() > m) {
      const Entry& e = entries_.back();
      if (e.kind == kEdgeAdded) {
        g.remove_edge(e.a, e.b);
      } else {
        g.remove_last_vertex();
      }
      entries_.pop_back();
    }
  }

 private:
  enum Kind : std::uint8_t { kEdgeAdded, kVertexAdded };
  struct Entry {
    Kind kind;
    Vertex a;
    Vertex b;
  };
  std::vector<Entry> entries_;
};

}  // namespace egv
