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

// Reference implementations. Everything here favours obviousness over speed
// and deliberately avoids the bitset tricks used by detect.hpp, so the two
// can be compared against each other.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "egverify/cycle_spec.hpp"
#include "egverify/graph.hpp"

namespace egv::oracle {

/// Largest graph the exhaustive oracles are meant for.
inline constexpr int kMaxOracleOrder = 40;

/// The set of lengths l such that the graph has a cycle of length exactly l.
struct CycleSpectrum {
  LengthSet lengths;

  bool contains(int l) const { return l >= 0 && l <= kMaxVertices && lengths.test(l); }

  bool intersects(const ForbiddenCycleSpec& spec) const {
    for (int l = 3; l <= kMaxVertices; ++l) {
      if (contains(l) && spec.is_forbidden(l)) return true;
    }
    return false;
  }

  std::vector<int> as_vector() const {
    std::vector<int> out;
    for (int l = 0; l <= kMaxVertices; ++l) {
      if (contains(l)) out.push_back(l);
    }
    return out;
  }
};

namespace detail {

inline std::vector<std::vector<Vertex>> adjacency_lists(const Graph& g) {
  std::vector<std::vector<Vertex>> adj(g.order());
  for (Vertex i = 0; i < g.order(); ++i) {
    for (Vertex j = 0; j < g.order(); ++j) {
      if (g.has_edge(i, j)) adj[i].push_back(j);
    }
  }
  return adj;
}

// Enumerates each simple cycle once: the root is its smallest vertex and the
// second vertex is smaller than the last. Calls visit(path) for every cycle;
// visit returns true to stop early.
template <typename Visit>
bool for_each_cycle(const Graph& g, Visit&& visit) {
  auto adj = adjacency_lists(g);
  std::vector<Vertex> path;
  std::vector<bool> on_path(g.order(), false);
  bool stop = false;

  auto dfs = [&](auto&& self, Vertex root, Vertex x) -> void {
    for (Vertex y : adj[x]) {
      if (stop) return;
      if (y == root && path.size() >= 3 && path[1] < path.back()) {
        if (visit(path)) stop = true;
      } else if (y > root && !on_path[y]) {
        path.push_back(y);
        on_path[y] = true;
        self(self, root, y);
        on_path[y] = false;
        path.pop_back();
      }
    }
  };

  for (Vertex r = 0; r < g.order() && !stop; ++r) {
    path.assign(1, r);
    on_path[r] = true;
    dfs(dfs, r, r);
    on_path[r] = false;
  }
  return stop;
}

// Calls visit(edge_count) for every simple path from a to b.
template <typename Visit>
void for_each_path_length(const std::vector<std::vector<Vertex>>& adj, Vertex a, Vertex b, Visit&& visit) {
  std::vector<bool> on_path(adj.size(), false);
  auto dfs = [&](auto&& self, Vertex x, int len) -> void {
    if (x == b) {
      visit(len);
      return;
    }
    for (Vertex y : adj[x]) {
      if (on_path[y]) continue;
      on_path[y] = true;
      self(self, y, len + 1);
      on_path[y] = false;
    }
  };
  on_path[a] = true;
  dfs(dfs, a, 0);
}

}  // namespace detail

/// Exact cycle spectrum by canonical-rooted simple cycle enumeration.
inline CycleSpectrum all_cycle_lengths(const Graph& g) {
  CycleSpectrum s;
  detail::for_each_cycle(g, [&](const std::vector<Vertex>& cycle) {
    s.lengths.set(cycle.size());
    return false;
  });
  return s;
}

/// Cycle spectrum of the cycles that pass through v.
inline CycleSpectrum cycle_lengths_through(const Graph& g, Vertex v) {
  CycleSpectrum s;
  detail::for_each_cycle(g, [&](const std::vector<Vertex>& cycle) {
    if (std::find(cycle.begin(), cycle.end(), v) != cycle.end()) s.lengths.set(cycle.size());
    return false;
  });
  return s;
}

/// Independent second route: every cycle either avoids the first edge {a, b}
/// or is an a-b path in the graph without that edge, closed by the edge.
inline CycleSpectrum cycle_lengths_by_edge_deletion(Graph g) {
  CycleSpectrum s;
  auto edges = g.edges();
  for (auto [a, b] : edges) {
    g.remove_edge(a, b);
    auto adj = detail::adjacency_lists(g);
    detail::for_each_path_length(adj, a, b, [&](int len) { s.lengths.set(len + 1); });
  }
  return s;
}

/// Vertex sequence of some cycle of length exactly l, if one exists.
inline std::optional<std::vector<Vertex>> find_cycle_of_length(const Graph& g, int l) {
  std::optional<std::vector<Vertex>> found;
  detail::for_each_cycle(g, [&](const std::vector<Vertex>& cycle) {
    if (static_cast<int>(cycle.size()) != l) return false;
    found = cycle;
    return true;
  });
  return found;
}

/// Is `seq` an induced path of g (consecutive adjacent, others non-adjacent)?
inline bool is_induced_path(const Graph& g, const std::vector<Vertex>& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j]) return false;
      bool adjacent = g.has_edge(seq[i], seq[j]);
      if (adjacent != (j == i + 1)) return false;
    }
  }
  return true;
}

/// Longest induced path of g, as a vertex sequence.
inline std::vector<Vertex> longest_induced_path_witness(const Graph& g) {
  auto adj = detail::adjacency_lists(g);
  std::vector<Vertex> best;
  std::vector<Vertex> path;

  auto dfs = [&](auto&& self) -> void {
    if (path.size() > best.size()) best = path;
    if (static_cast<int>(best.size()) == g.order()) return;
    Vertex last = path.back();
    for (Vertex y : adj[last]) {
      bool ok = true;
      for (std::size_t i = 0; i < path.size() && ok; ++i) {
        if (path[i] == y) ok = false;
        else if (i + 1 < path.size() && g.has_edge(path[i], y)) ok = false;
      }
      if (!ok) continue;
      path.push_back(y);
      self(self);
      path.pop_back();
    }
  };

  for (Vertex s = 0; s < g.order(); ++s) {
    path.assign(1, s);
    dfs(dfs);
  }
  return best;
}

/// Number of vertices of a longest induced path (0 for the empty graph).
inline int longest_induced_path(const Graph& g) {
  return static_cast<int>(longest_induced_path_witness(g).size());
}

/// Minimum degree >= 3, no induced P_k and no forbidden cycle.
inline bool is_counterexample(const Graph& g, int k, const ForbiddenCycleSpec& spec) {
  if (g.order() == 0) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    int deg = 0;
    for (Vertex w = 0; w < g.order(); ++w) deg += g.has_edge(v, w) ? 1 : 0;
    if (deg < 3) return false;
  }
  if (longest_induced_path(g) >= k) return false;
  return !all_cycle_lengths(g).intersects(spec);
}

namespace detail {

// Per-vertex invariant: degree, triangle count and the number of vertices at
// each BFS distance.
inline std::vector<std::vector<int>> vertex_signatures(const Graph& g) {
  auto adj = adjacency_lists(g);
  std::vector<std::vector<int>> sig(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    int triangles = 0;
    for (Vertex a : adj[v]) {
      for (Vertex b : adj[v]) {
        if (a < b && g.has_edge(a, b)) ++triangles;
      }
    }
    std::vector<int> dist(g.order(), -1);
    std::vector<Vertex> queue{v};
    dist[v] = 0;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (Vertex y : adj[queue[q]]) {
        if (dist[y] < 0) {
          dist[y] = dist[queue[q]] + 1;
          queue.push_back(y);
        }
      }
    }
    std::vector<int> profile(g.order() + 1, 0);
    for (int d : dist) profile[d < 0 ? g.order() : d]++;
    sig[v] = {static_cast<int>(adj[v].size()), triangles};
    sig[v].insert(sig[v].end(), profile.begin(), profile.end());
  }
  return sig;
}

// Colour refinement seeded by the signatures. Colours are canonical across
// graphs because they are derived from sorted signature tuples.
inline std::vector<std::vector<int>> refined_colours(const Graph& g) {
  auto adj = adjacency_lists(g);
  auto colour = vertex_signatures(g);
  for (int round = 0; round < 3; ++round) {
    std::vector<std::vector<int>> next(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
      std::vector<std::vector<int>> around;
      for (Vertex y : adj[v]) around.push_back(colour[y]);
      std::sort(around.begin(), around.end());
      next[v] = colour[v];
      next[v].push_back(-1);
      for (const auto& c : around) {
        next[v].insert(next[v].end(), c.begin(), c.end());
        next[v].push_back(-2);
      }
    }
    colour = std::move(next);
  }
  return colour;
}

}  // namespace detail

/// Isomorphism invariant: sorted multiset of per-vertex signatures.
inline std::vector<std::vector<int>> isomorphism_invariant(const Graph& g) {
  auto sig = detail::vertex_signatures(g);
  std::sort(sig.begin(), sig.end());
  return sig;
}

/// Exact isomorphism test by backtracking over colour-compatible vertex maps.
inline bool are_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.order() != g2.order() || g1.size() != g2.size()) return false;
  const int n = g1.order();
  auto c1 = detail::refined_colours(g1);
  auto c2 = detail::refined_colours(g2);
  {
    auto s1 = c1;
    auto s2 = c2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return false;
  }

  // Map g1's vertices in BFS order so each new vertex has a mapped neighbour.
  std::vector<Vertex> order;
  std::vector<bool> placed(n, false);
  for (Vertex s = 0; s < n; ++s) {
    if (placed[s]) continue;
    placed[s] = true;
    order.push_back(s);
    for (std::size_t q = order.size() - 1; q < order.size(); ++q) {
      for (Vertex y = 0; y < n; ++y) {
        if (!placed[y] && g1.has_edge(order[q], y)) {
          placed[y] = true;
          order.push_back(y);
        }
      }
    }
  }

  std::vector<Vertex> image(n, -1);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == order.size()) return true;
    Vertex u = order[depth];
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || c1[u] != c2[w]) continue;
      bool consistent = true;
      for (std::size_t i = 0; i < depth && consistent; ++i) {
        Vertex p = order[i];
        consistent = g1.has_edge(u, p) == g2.has_edge(w, image[p]);
      }
      if (!consistent) continue;
      image[u] = w;
      used[w] = true;
      if (self(self, depth + 1)) return true;
      used[w] = false;
      image[u] = -1;
    }
    return false;
  };
  return extend(extend, 0);
}

/// Groups graphs into isomorphism classes. Each class lists indices into
/// `graphs`; classes are ordered by their first member.
inline std::vector<std::vector<std::size_t>> isomorphism_classes(const std::vector<Graph>& graphs) {
  std::map<std::vector<std::vector<int>>, std::vector<std::size_t>> class_ids_by_invariant;
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    auto& bucket = class_ids_by_invariant[isomorphism_invariant(graphs[i])];
    bool placed = false;
    for (std::size_t c : bucket) {
      if (are_isomorphic(graphs[classes[c].front()], graphs[i])) {
        classes[c].push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) {
      bucket.push_back(classes.size());
      classes.push_back({i});
    }
  }
  return classes;
}

}  // namespace egv::oracle
