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

// Fast detectors used inside the search loop. Both detectors are anchored at
// a single vertex: the search maintains that every forbidden cycle or induced
// path it could have just created passes through the newest vertex.

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "egverify/cycle_spec.hpp"
#include "egverify/graph.hpp"

namespace egv {

namespace detail {

// Is there a simple path from `start` to a vertex of `targets`, avoiding
// `blocked`, whose edge count p has bit p set in `lengths`?
class LengthedPathSearch {
 public:
  LengthedPathSearch(const Graph& g, VertexSet blocked, VertexSet targets, std::uint64_t lengths)
      : g_(g), allowed_(g.vertices() & ~blocked), targets_(targets & allowed_), lengths_(lengths) {
    max_len_ = lengths_ == 0 ? -1 : 63 - std::countl_zero(lengths_);
    // Multi-source BFS from the targets; a lower bound on the remaining edges.
    dist_.fill(kUnreachable);
    VertexSet seen = targets_;
    VertexSet frontier = targets_;
    for (int d = 0; frontier != 0; ++d) {
      VertexSet next = 0;
      for_each_vertex(frontier, [&](Vertex x) {
        dist_[x] = d;
        next |= g_.neighbors(x);
      });
      next &= allowed_ & ~seen;
      seen |= next;
      frontier = next;
    }
  }

  bool from(Vertex start) {
    if (max_len_ < 0 || !contains(allowed_, start)) return false;
    if (dist_[start] > max_len_) return false;
    return dfs(start, bit(start), 0);
  }

 private:
  static constexpr int kUnreachable = 1 << 20;

  bool dfs(Vertex x, VertexSet visited, int depth) {
    if (contains(targets_, x) && ((lengths_ >> depth) & 1U)) return true;
    if (depth >= max_len_) return false;
    VertexSet next = g_.neighbors(x) & allowed_ & ~visited;
    while (next != 0) {
      Vertex y = std::countr_zero(next);
      next &= next - 1;
      int reach = depth + 1 + dist_[y];
      if (reach > max_len_ || (lengths_ >> reach) == 0) continue;
      if (dfs(y, visited | bit(y), depth + 1)) return true;
    }
    return false;
  }

  const Graph& g_;
  VertexSet allowed_;
  VertexSet targets_;
  std::uint64_t lengths_;
  int max_len_ = -1;
  std::array<int, kMaxVertices> dist_{};
};

class InducedPathSearch {
 public:
  InducedPathSearch(const Graph& g, int k) : g_(g), k_(k) {}

  bool through(Vertex v) {
    origin_ = v;
    return grow(bit(v), 0, v, v, 1, false);
  }

 private:
  // The path occupies `path`; `interior` is the union of neighbourhoods of
  // every path vertex except the two ends. A new vertex attached to one end
  // must avoid the path, `interior` and the neighbourhood of the other end.
  // Phase 1 grows the first arm from `origin_`; phase 2 grows the second arm
  // from `origin_` once the first arm is at least as long as what remains.
  bool grow(VertexSet path, VertexSet interior, Vertex end1, Vertex end2, int count, bool second_arm) {
    if (count >= k_) return true;
    if (!second_arm) {
      VertexSet cand = g_.neighbors(end1) & ~path & ~interior;
      if (end1 != end2) cand &= ~g_.neighbors(end2);
      VertexSet grown_interior = end1 != end2 ? interior | g_.neighbors(end1) : interior;
      while (cand != 0) {
        Vertex x = std::countr_zero(cand);
        cand &= cand - 1;
        if (grow(path | bit(x), grown_interior, x, end2, count + 1, false)) return true;
      }
      // Arm 1 holds count - 1 vertices besides the origin; arm 2 needs k - count.
      if (end1 != end2 && count - 1 >= k_ - count) {
        return grow(path, interior, end1, end2, count, true);
      }
      return false;
    }
    VertexSet cand = g_.neighbors(end2) & ~path & ~interior & ~g_.neighbors(end1);
    VertexSet grown_interior = interior | g_.neighbors(end2);
    while (cand != 0) {
      Vertex y = std::countr_zero(cand);
      cand &= cand - 1;
      if (grow(path | bit(y), grown_interior, end1, y, count + 1, true)) return true;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  Vertex origin_ = 0;
};

}  // namespace detail

/// Would adding the absent edge {v, s} create a cycle whose length is forbidden?
/// Only cycles using the new edge are considered.
inline bool would_close_forbidden_cycle(const Graph& g, Vertex v, Vertex s, const ForbiddenCycleSpec& spec) {
  std::uint64_t lengths = spec.closing_path_lengths(g.order());
  detail::LengthedPathSearch search(g, bit(v), g.neighbors(v), lengths);
  return search.from(s);
}

/// True iff some cycle through v has a forbidden length. Assumes every
/// forbidden cycle of g, if any, passes through v.
inline bool creates_forbidden_cycle_through(const Graph& g, Vertex v, const ForbiddenCycleSpec& spec) {
  std::uint64_t lengths = spec.closing_path_lengths(g.order());
  VertexSet nbrs = g.neighbors(v);
  bool found = false;
  for_each_vertex(nbrs, [&](Vertex a) {
    if (found) return;
    VertexSet later = nbrs & ~prefix_set(a + 1);
    if (later == 0) return;
    detail::LengthedPathSearch search(g, bit(v), later, lengths);
    found = search.from(a);
  });
  return found;
}

/// True iff g has an induced path on k vertices containing v.
inline bool has_induced_path_through(const Graph& g, Vertex v, int k) {
  if (k <= 1) return k == 1 || k <= 0;
  if (k > g.order()) return false;
  detail::InducedPathSearch search(g, k);
  return search.through(v);
}

/// True iff g has any induced path on k vertices.
inline bool has_induced_path(const Graph& g, int k) {
  if (k <= 0) return true;
  if (k > g.order()) return false;
  detail::InducedPathSearch search(g, k);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (search.through(v)) return true;
  }
  return false;
}

/// Resumable enumerator of the safe neighbour sets of one vertex.
///
/// Sets are produced in lexicographic depth-first order over ascending
/// candidates: the empty set first, then each set followed by its extensions
/// with larger candidates. The edges of the current set are present in the
/// graph between calls to next(); each inclusion is recorded in the log and
/// backtracking rolls it back.
class SafeSetEnumerator {
 public:
  SafeSetEnumerator(const Graph& g, Vertex v, const ForbiddenCycleSpec& spec,
                    std::optional<int> degree_cap = std::nullopt)
      : v_(v), degree_cap_(degree_cap), lengths_(spec.closing_path_lengths(g.order())) {
    for_each_vertex(g.vertices() & ~g.neighbors(v) & ~bit(v),
                    [&](Vertex c) { candidates_[num_candidates_++] = c; });
  }

  Vertex vertex() const noexcept { return v_; }

  /// The vertices joined to v by the current set.
  VertexSet current() const noexcept { return current_; }

  /// Advances to the next safe set. Returns false (with every inclusion
  /// rolled back) when the enumeration is exhausted.
  bool next(Graph& g, MutationLog& log) {
    if (!started_) {
      started_ = true;
      return true;
    }
    for (;;) {
      while (next_pos_ < num_candidates_) {
        int pos = next_pos_++;
        Vertex c = candidates_[pos];
        if (!includable(g, c)) continue;
        stack_[depth_++] = {pos, log.mark()};
        log.add_edge(g, v_, c);
        current_ |= bit(c);
        return true;
      }
      if (depth_ == 0) return false;
      const Choice& top = stack_[--depth_];
      log.rollback_to(g, top.mark);
      current_ &= ~bit(candidates_[top.pos]);
      next_pos_ = top.pos + 1;
    }
  }

 private:
  struct Choice {
    int pos;
    MutationLog::Mark mark;
  };

  bool includable(const Graph& g, Vertex c) const {
    if (degree_cap_ && (g.degree(v_) >= *degree_cap_ || g.degree(c) >= *degree_cap_)) return false;
    detail::LengthedPathSearch search(g, bit(v_), g.neighbors(v_), lengths_);
    return !search.from(c);
  }

  Vertex v_;
  std::optional<int> degree_cap_;
  std::uint64_t lengths_;
  std::array<Vertex, kMaxVertices> candidates_{};
  int num_candidates_ = 0;
  std::array<Choice, kMaxVertices> stack_{};
  int depth_ = 0;
  int next_pos_ = 0;
  VertexSet current_ = 0;
  bool started_ = false;
};

/// Every safe neighbour set of the newest vertex, in enumeration order.
inline std::vector<VertexSet> enumerate_safe_sets(const Graph& g, const ForbiddenCycleSpec& spec,
                                                  std::optional<int> degree_cap = std::nullopt) {
  std::vector<VertexSet> out;
  if (g.order() == 0) return out;
  Graph work = g;
  MutationLog log;
  SafeSetEnumerator sets(work, work.order() - 1, spec, degree_cap);
  while (sets.next(work, log)) out.push_back(sets.current());
  return out;
}

}  // namespace egv
