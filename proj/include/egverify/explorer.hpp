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

// Backtracking search for P_k-free graphs of minimum degree >= 3 without
// forbidden cycles.
//
// The search starts from a graph whose newest vertex v is the growth
// frontier. For each safe neighbour set S of v it joins S to v; if the result
// has an induced P_k the branch is abandoned; otherwise, if every degree is at
// least 3 the graph is a counterexample, and if not a pendant vertex is
// attached to the largest-index vertex of degree < 3 and the search recurses
// on it. A run that explores every branch without a counterexample is
// VERIFIED.
//
// Two facts keep the checks local: the graph entering a frame has no
// forbidden cycle, and the graph that passed the induced-path check only
// gains a pendant vertex before the next frame. So both checks only look at
// structures through the frame's newest vertex.

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <tbb/global_control.h>
#include <tbb/task_arena.h>
#include <tbb/task_group.h>

#include "egverify/cycle_spec.hpp"
#include "egverify/detect.hpp"
#include "egverify/graph.hpp"
#include "egverify/oracle.hpp"

namespace egv {

/// Receives search events. Calls are serialised by the explorer, so an
/// implementation does not need its own locking.
class ProgressSink {
 public:
  virtual ~ProgressSink() = default;
  /// A new frame was entered; g's newest vertex is the frontier.
  virtual void on_frame(int /*depth*/, const Graph& /*g*/) {}
  /// Safe set `joined` was connected to frontier vertex v.
  virtual void on_safe_set(int /*depth*/, Vertex /*v*/, VertexSet /*joined*/, const Graph& /*g*/) {}
  virtual void on_counterexample(int /*depth*/, const Graph& /*g*/) {}
  virtual void on_budget_cutoff(int /*depth*/, const Graph& /*g*/) {}
};

struct ParallelConfig {
  int threads = 1;
  /// Branches created by frames shallower than this are run as separate tasks.
  int spawn_depth = 2;
};

struct SearchConfig {
  int k = 3;
  ForbiddenCycleSpec cycle_spec = ForbiddenCycleSpec::powers_of_two();
  std::optional<int> degree_cap;
  std::optional<int> max_vertices;
  ParallelConfig parallel;
  bool collect_all = false;
  /// Oracle-backed assertions at every frame. Only practical for small k.
  bool check_invariants = false;
  ProgressSink* sink = nullptr;
};

enum class Verdict { kVerified, kCounterexample, kBudgetExhausted };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kVerified:
      return "VERIFIED";
    case Verdict::kCounterexample:
      return "COUNTEREXAMPLE";
    case Verdict::kBudgetExhausted:
      return "INCONCLUSIVE";
  }
  return "?";
}

/// A counterexample snapshot together with the properties it was found to have.
struct Certificate {
  Graph graph;
  int k = 0;
  int min_degree = 0;
  int max_degree = 0;
  /// Checked with the fast detector at capture time.
  bool induced_path_free = false;
  /// Oracle spectrum; absent for graphs above oracle scale.
  std::optional<oracle::CycleSpectrum> spectrum;
};

inline Certificate make_certificate(const Graph& g, int k) {
  Certificate c{g, k, g.min_degree(), g.max_degree(), !has_induced_path(g, k), std::nullopt};
  if (g.order() <= oracle::kMaxOracleOrder) c.spectrum = oracle::all_cycle_lengths(g);
  return c;
}

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t safe_sets = 0;
  std::uint64_t budget_cutoffs = 0;
  int max_depth = 0;
  int max_order = 0;
  double wall_seconds = 0.0;

  void merge(const SearchStats& o) {
    nodes += o.nodes;
    safe_sets += o.safe_sets;
    budget_cutoffs += o.budget_cutoffs;
    max_depth = std::max(max_depth, o.max_depth);
    max_order = std::max(max_order, o.max_order);
  }

  friend bool operator==(const SearchStats& a, const SearchStats& b) {
    return a.nodes == b.nodes && a.safe_sets == b.safe_sets && a.budget_cutoffs == b.budget_cutoffs &&
           a.max_depth == b.max_depth && a.max_order == b.max_order;
  }
};

struct SearchOutcome {
  Verdict verdict = Verdict::kVerified;
  std::vector<Certificate> certificates;
  SearchStats stats;
  /// Some branch was cut by the vertex budget (also set alongside certificates).
  bool truncated = false;
};

/// Raised when an oracle-backed invariant check fails during a search.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline bool graph_less(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  for (Vertex v = 0; v < a.order(); ++v) {
    if (a.neighbors(v) != b.neighbors(v)) return a.neighbors(v) < b.neighbors(v);
  }
  return false;
}

class Search {
 public:
  Search(const SearchConfig& cfg, int budget) : cfg_(cfg), budget_(budget) {}

  SearchOutcome run(const Graph& start) {
    auto t0 = std::chrono::steady_clock::now();
    if (cfg_.parallel.threads > 1) {
      // TBB caps workers at the hardware concurrency unless told otherwise.
      tbb::global_control allow(tbb::global_control::max_allowed_parallelism,
                                static_cast<std::size_t>(cfg_.parallel.threads));
      tbb::task_arena arena(cfg_.parallel.threads);
      arena.execute([&] {
        tasks_.run([this, start] { work(start, 0, true); });
        tasks_.wait();
      });
    } else {
      work(start, 0, false);
    }
    auto t1 = std::chrono::steady_clock::now();

    SearchOutcome out;
    out.stats = stats_;
    out.stats.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
    out.truncated = stats_.budget_cutoffs > 0;
    std::sort(certificates_.begin(), certificates_.end(),
              [](const Certificate& a, const Certificate& b) { return graph_less(a.graph, b.graph); });
    out.certificates = std::move(certificates_);
    if (!out.certificates.empty()) {
      out.verdict = Verdict::kCounterexample;
    } else if (out.truncated) {
      out.verdict = Verdict::kBudgetExhausted;
    } else {
      out.verdict = Verdict::kVerified;
    }
    if (error_) std::rethrow_exception(error_);
    return out;
  }

 private:
  struct Frame {
    SafeSetEnumerator sets;
    MutationLog::Mark entry_mark;
    std::uint64_t entry_fingerprint;
    std::uint64_t parent_fingerprint;
  };

  void work(Graph g, int base_depth, bool may_spawn) {
    try {
      explore_from(g, base_depth, may_spawn);
    } catch (...) {
      std::lock_guard lock(mu_);
      if (!error_) error_ = std::current_exception();
      stop_.store(true, std::memory_order_relaxed);
    }
  }

  void explore_from(Graph& g, int base_depth, bool may_spawn) {
    SearchStats local;
    MutationLog log;
    std::vector<Frame> frames;
    frames.reserve(kMaxVertices);

    auto enter = [&](MutationLog::Mark mark, std::uint64_t parent_fp) {
      Vertex v = g.order() - 1;
      int depth = base_depth + static_cast<int>(frames.size());
      ++local.nodes;
      local.max_depth = std::max(local.max_depth, depth);
      local.max_order = std::max(local.max_order, g.order());
      if (cfg_.check_invariants && oracle::all_cycle_lengths(g).intersects(cfg_.cycle_spec)) {
        throw InvariantViolation("frame entered with a forbidden cycle");
      }
      notify([&](ProgressSink& s) { s.on_frame(depth, g); });
      std::uint64_t fp = cfg_.check_invariants ? fingerprint(g) : 0;
      frames.push_back({SafeSetEnumerator(g, v, cfg_.cycle_spec, cfg_.degree_cap), mark, fp, parent_fp});
    };

    enter(log.mark(), 0);
    while (!frames.empty()) {
      if (stop_.load(std::memory_order_relaxed)) break;
      Frame& f = frames.back();
      const int depth = base_depth + static_cast<int>(frames.size()) - 1;

      if (!f.sets.next(g, log)) {
        if (cfg_.check_invariants && fingerprint(g) != f.entry_fingerprint) {
          throw InvariantViolation("safe-set enumeration did not restore the frame graph");
        }
        log.rollback_to(g, f.entry_mark);
        if (cfg_.check_invariants && frames.size() > 1 && fingerprint(g) != f.parent_fingerprint) {
          throw InvariantViolation("backtracking did not restore the parent graph");
        }
        frames.pop_back();
        continue;
      }

      ++local.safe_sets;
      const Vertex v = f.sets.vertex();
      notify([&](ProgressSink& s) { s.on_safe_set(depth, v, f.sets.current(), g); });
      if (has_induced_path_through(g, v, cfg_.k)) continue;
      if (cfg_.check_invariants && oracle::longest_induced_path(g) >= cfg_.k) {
        throw InvariantViolation("induced path missed by the anchored check");
      }

      auto anchor = get_largest_low_degree_vertex(g);
      if (!anchor) {
        notify([&](ProgressSink& s) { s.on_counterexample(depth, g); });
        Certificate cert = make_certificate(g, cfg_.k);
        {
          std::lock_guard lock(mu_);
          certificates_.push_back(std::move(cert));
        }
        if (!cfg_.collect_all) {
          stop_.store(true, std::memory_order_relaxed);
          break;
        }
        continue;
      }

      if (g.order() >= budget_) {
        ++local.budget_cutoffs;
        notify([&](ProgressSink& s) { s.on_budget_cutoff(depth, g); });
        continue;
      }

      std::uint64_t fp = cfg_.check_invariants ? fingerprint(g) : 0;
      MutationLog::Mark mark = log.mark();
      Vertex u = log.add_vertex(g);
      log.add_edge(g, *anchor, u);
      if (may_spawn && depth < cfg_.parallel.spawn_depth) {
        Graph branch = g;
        log.rollback_to(g, mark);
        tasks_.run([this, branch, child = depth + 1] { work(branch, child, true); });
        continue;
      }
      enter(mark, fp);
    }

    std::lock_guard lock(mu_);
    stats_.merge(local);
  }

  template <typename Fn>
  void notify(Fn&& fn) {
    if (cfg_.sink == nullptr) return;
    std::lock_guard lock(sink_mu_);
    fn(*cfg_.sink);
  }

  const SearchConfig& cfg_;
  int budget_;
  std::atomic<bool> stop_{false};
  tbb::task_group tasks_;
  std::mutex mu_;
  std::mutex sink_mu_;
  SearchStats stats_;
  std::vector<Certificate> certificates_;
  std::exception_ptr error_;
};

inline void validate(const SearchConfig& cfg) {
  if (cfg.k < 3) throw std::invalid_argument("k must be at least 3, got " + std::to_string(cfg.k));
  if (cfg.max_vertices && (*cfg.max_vertices < 1 || *cfg.max_vertices > kMaxVertices)) {
    throw std::invalid_argument("max_vertices must lie in [1, " + std::to_string(kMaxVertices) + "]");
  }
  if (cfg.degree_cap && *cfg.degree_cap < 3) {
    throw std::invalid_argument("degree cap must be at least 3");
  }
  if (cfg.parallel.threads < 1) throw std::invalid_argument("thread count must be positive");
  if (cfg.parallel.spawn_depth < 0) throw std::invalid_argument("spawn depth must be non-negative");
}

}  // namespace detail

/// Runs the search from `start`, whose newest vertex is the growth frontier
/// and which must not contain a forbidden cycle.
inline SearchOutcome explore(const Graph& start, const SearchConfig& cfg) {
  detail::validate(cfg);
  if (start.order() == 0) throw std::invalid_argument("explore needs a non-empty start graph");
  int budget = cfg.max_vertices.value_or(kMaxVertices);
  if (start.order() > budget) {
    SearchOutcome out;
    out.verdict = Verdict::kBudgetExhausted;
    out.truncated = true;
    out.stats.budget_cutoffs = 1;
    return out;
  }
  detail::Search search(cfg, budget);
  return search.run(start);
}

/// Searches for a counterexample with an induced P_{k-1} but no induced P_k,
/// starting from the path on k vertices.
inline SearchOutcome run_verification(int k, SearchConfig cfg) {
  cfg.k = k;
  detail::validate(cfg);
  if (cfg.max_vertices && k > *cfg.max_vertices) {
    SearchOutcome out;
    out.verdict = Verdict::kBudgetExhausted;
    out.truncated = true;
    out.stats.budget_cutoffs = 1;
    return out;
  }
  return explore(new_path(k), cfg);
}

/// Collects every counterexample of maximum degree at most the cap (3 unless
/// configured) reachable from the path on k vertices within the vertex budget.
inline SearchOutcome special_search(int k, SearchConfig cfg) {
  if (!cfg.degree_cap) cfg.degree_cap = 3;
  cfg.collect_all = true;
  return run_verification(k, cfg);
}

}  // namespace egv
