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

// egverify: command-line front end.
//
//   egverify verify  --k 3..11 --forbid pow2
//   egverify check   --in graph.edges --k 18 --forbid 4,8
//   egverify special --forbid 4,8 --max-degree 3 --k 18 --max-vertices 24
//
// Exit codes: 0 verified (or special enumeration produced certificates),
// 1 counterexample found, 2 usage or input error, 3 inconclusive.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "egverify/egverify.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitVerified = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct KRange {
  int first = 0;
  int last = 0;
};

KRange parse_k_range(const std::string& text) {
  auto parse = [&](const std::string& s) {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad k value '" + text + "'");
    return v;
  };
  try {
    auto dots = text.find("..");
    KRange r;
    if (dots == std::string::npos) {
      r.first = r.last = parse(text);
    } else {
      r.first = parse(text.substr(0, dots));
      r.last = parse(text.substr(dots + 2));
    }
    if (r.first < 3 || r.last < r.first) throw std::invalid_argument("k range must satisfy 3 <= first <= last");
    return r;
  } catch (const std::logic_error& e) {
    throw CLI::ValidationError("--k", std::string(e.what()) + " (expected K or A..B)");
  }
}

egv::ForbiddenCycleSpec parse_forbid(const std::string& text) {
  if (text == "pow2") return egv::ForbiddenCycleSpec::powers_of_two();
  std::vector<int> lengths;
  std::stringstream in(text);
  std::string item;
  try {
    while (std::getline(in, item, ',')) {
      std::size_t used = 0;
      lengths.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    }
    if (lengths.empty()) throw std::invalid_argument("empty list");
    return egv::ForbiddenCycleSpec::exactly_range(lengths);
  } catch (const std::logic_error& e) {
    throw CLI::ValidationError("--forbid", "expected 'pow2' or a list like 4,8 (" + std::string(e.what()) + ")");
  }
}

enum class LogLevel { kInfo, kDebug, kTrace };

LogLevel parse_log_level(const std::string& s) {
  if (s == "info") return LogLevel::kInfo;
  if (s == "debug") return LogLevel::kDebug;
  if (s == "trace") return LogLevel::kTrace;
  throw CLI::ValidationError("--log", "expected info, debug or trace");
}

std::string set_to_string(egv::VertexSet s) {
  std::string out = "{";
  egv::for_each_vertex(s, [&](egv::Vertex v) {
    if (out.size() > 1) out += ',';
    out += std::to_string(v);
  });
  return out + "}";
}

std::string edges_inline(const egv::Graph& g) {
  std::string out;
  for (auto [i, j] : g.edges()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(i) + "-" + std::to_string(j);
  }
  return out;
}

// debug: one line per frame; trace: also one line per safe set with the graph.
// A frame with no vertex of degree below 3 logs anchor=-1.
class LogSink : public egv::ProgressSink {
 public:
  LogSink(std::ostream& out, LogLevel level) : out_(out), level_(level) {}

  void on_frame(int depth, const egv::Graph& g) override {
    auto anchor = egv::get_largest_low_degree_vertex(g);
    out_ << "frame depth=" << depth << " n=" << g.order() << " m=" << g.size() << " anchor=" << (anchor ? *anchor : -1)
         << '\n';
  }
  void on_safe_set(int depth, egv::Vertex v, egv::VertexSet s, const egv::Graph& g) override {
    if (level_ != LogLevel::kTrace) return;
    out_ << "  safe-set depth=" << depth << " v=" << v << " S=" << set_to_string(s) << " edges: " << edges_inline(g)
         << '\n';
  }
  void on_counterexample(int depth, const egv::Graph& g) override {
    out_ << "counterexample depth=" << depth << " graph6=" << egv::io::emit_graph6(g) << '\n';
  }
  void on_budget_cutoff(int depth, const egv::Graph& g) override {
    if (level_ == LogLevel::kTrace) out_ << "  budget-cutoff depth=" << depth << " n=" << g.order() << '\n';
  }

 private:
  std::ostream& out_;
  LogLevel level_;
};

struct SearchFlags {
  std::string k = "3..11";
  std::string forbid = "pow2";
  int threads = 1;
  int spawn_depth = 2;
  int max_vertices = 0;
  bool stats = false;
  std::string log = "info";
  std::string out_dir;
};

void add_search_flags(CLI::App* cmd, SearchFlags& f) {
  cmd->add_option("--k", f.k, "k or a range A..B (start path P_k, forbid induced P_k)")->capture_default_str();
  cmd->add_option("--forbid", f.forbid, "forbidden cycle lengths: pow2 or a list like 4,8")->capture_default_str();
  cmd->add_option("--threads", f.threads, "worker threads")->check(CLI::Range(1, 1024))->capture_default_str();
  cmd->add_option("--spawn-depth", f.spawn_depth, "frames shallower than this spawn parallel tasks")
      ->check(CLI::Range(0, egv::kMaxVertices))
      ->capture_default_str();
  cmd->add_option("--max-vertices", f.max_vertices, "vertex budget (0 = graph capacity)")
      ->check(CLI::Range(0, egv::kMaxVertices));
  cmd->add_flag("--stats", f.stats, "print a summary table of search statistics");
  cmd->add_option("--log", f.log, "info, debug or trace")->capture_default_str();
  cmd->add_option("--out", f.out_dir, "directory for certificates and logs");
}

// Owns the log stream: <out>/search.log when --out is given, stderr otherwise.
struct LogSetup {
  std::unique_ptr<std::ofstream> file;
  std::unique_ptr<LogSink> sink;
};

LogSetup make_log(const SearchFlags& f) {
  LogSetup s;
  LogLevel level = parse_log_level(f.log);
  if (level == LogLevel::kInfo) return s;
  std::ostream* os = &std::cerr;
  if (!f.out_dir.empty()) {
    s.file = std::make_unique<std::ofstream>(fs::path(f.out_dir) / "search.log");
    os = s.file.get();
  }
  s.sink = std::make_unique<LogSink>(*os, level);
  return s;
}

egv::SearchConfig make_config(const SearchFlags& f, const egv::ForbiddenCycleSpec& spec, egv::ProgressSink* sink) {
  egv::SearchConfig cfg;
  cfg.cycle_spec = spec;
  cfg.parallel.threads = f.threads;
  cfg.parallel.spawn_depth = f.spawn_depth;
  if (f.max_vertices > 0) cfg.max_vertices = f.max_vertices;
  cfg.sink = sink;
  return cfg;
}

void print_row(int k, const egv::ForbiddenCycleSpec& spec, const egv::SearchOutcome& o) {
  std::printf("k=%d forbid=%s verdict=%s time_s=%.3f nodes=%llu safe_sets=%llu max_depth=%d max_order=%d certificates=%zu\n",
              k, spec.to_string().c_str(), egv::to_string(o.verdict), o.stats.wall_seconds,
              static_cast<unsigned long long>(o.stats.nodes), static_cast<unsigned long long>(o.stats.safe_sets),
              o.stats.max_depth, o.stats.max_order, o.certificates.size());
  std::fflush(stdout);
}

std::string format_seconds(double s) {
  char buf[32];
  if (s < 60) {
    std::snprintf(buf, sizeof buf, "%.2fs", s);
  } else if (s < 3600) {
    std::snprintf(buf, sizeof buf, "%dm %02ds", static_cast<int>(s) / 60, static_cast<int>(s) % 60);
  } else {
    std::snprintf(buf, sizeof buf, "%dh %02dm", static_cast<int>(s) / 3600, (static_cast<int>(s) % 3600) / 60);
  }
  return buf;
}

void print_stats_table(const std::vector<std::pair<int, egv::SearchOutcome>>& rows) {
  std::ostringstream head;
  std::ostringstream time;
  std::ostringstream nodes;
  head << std::left << std::setw(12) << "k";
  time << std::left << std::setw(12) << "time";
  nodes << std::left << std::setw(12) << "nodes";
  for (const auto& [k, o] : rows) {
    head << "| " << std::setw(12) << k;
    time << "| " << std::setw(12) << format_seconds(o.stats.wall_seconds);
    nodes << "| " << std::setw(12) << o.stats.nodes;
  }
  std::cout << head.str() << '\n' << time.str() << '\n' << nodes.str() << '\n';
}

std::string certificate_comment(const egv::Certificate& c, const egv::ForbiddenCycleSpec& spec) {
  std::ostringstream out;
  out << "# certificate: n=" << c.graph.order() << " m=" << c.graph.size() << " min_degree=" << c.min_degree
      << " max_degree=" << c.max_degree << " P_" << c.k << "-free=" << (c.induced_path_free ? "yes" : "no")
      << " forbid=" << spec.to_string() << '\n';
  if (c.spectrum) {
    out << "# cycle spectrum:";
    for (int l : c.spectrum->as_vector()) out << ' ' << l;
    out << '\n';
  }
  return out.str();
}

std::vector<std::string> write_certificates(const std::string& dir, const std::string& stem, int k,
                                            const std::vector<egv::Certificate>& certs,
                                            const egv::ForbiddenCycleSpec& spec) {
  std::vector<std::string> paths;
  if (dir.empty()) return paths;
  for (std::size_t i = 0; i < certs.size(); ++i) {
    std::string base = stem + "_k" + std::to_string(k) + "_" + std::to_string(i);
    fs::path edges = fs::path(dir) / (base + ".edges");
    fs::path g6 = fs::path(dir) / (base + ".g6");
    std::ofstream(edges) << certificate_comment(certs[i], spec) << egv::io::emit_edge_list(certs[i].graph);
    std::ofstream(g6) << egv::io::emit_graph6(certs[i].graph) << '\n';
    paths.push_back(edges.string());
    paths.push_back(g6.string());
  }
  return paths;
}

int cmd_verify(const SearchFlags& f) {
  KRange range = parse_k_range(f.k);
  auto spec = parse_forbid(f.forbid);
  if (!f.out_dir.empty()) fs::create_directories(f.out_dir);
  LogSetup log = make_log(f);
  auto cfg = make_config(f, spec, log.sink.get());

  std::printf("# verify k=%d..%d forbid=%s threads=%d spawn_depth=%d max_vertices=%d\n", range.first, range.last,
              spec.to_string().c_str(), f.threads, f.spawn_depth,
              f.max_vertices > 0 ? f.max_vertices : egv::kMaxVertices);
  std::vector<std::pair<int, egv::SearchOutcome>> rows;
  egv::Verdict overall = egv::Verdict::kVerified;
  for (int k = range.first; k <= range.last; ++k) {
    auto out = egv::run_verification(k, cfg);
    print_row(k, spec, out);
    for (const auto& path : write_certificates(f.out_dir, "certificate", k, out.certificates, spec)) {
      std::printf("certificate_file=%s\n", path.c_str());
    }
    if (f.out_dir.empty()) {
      for (const auto& c : out.certificates) std::printf("certificate_graph6=%s\n", egv::io::emit_graph6(c.graph).c_str());
    }
    overall = out.verdict;
    rows.emplace_back(k, std::move(out));
    if (overall != egv::Verdict::kVerified) break;
  }
  if (f.stats) print_stats_table(rows);

  switch (overall) {
    case egv::Verdict::kVerified:
      std::printf("result: VERIFIED for k=%d..%d", range.first, range.last);
      if (range.first == 3) {
        std::printf(" (every P_%d-free graph with minimum degree >= 3 has a cycle of length in %s)", range.last,
                    spec.to_string().c_str());
      }
      std::printf("\n");
      return kExitVerified;
    case egv::Verdict::kCounterexample:
      std::printf("result: COUNTEREXAMPLE at k=%d\n", rows.back().first);
      return kExitCounterexample;
    case egv::Verdict::kBudgetExhausted:
      std::printf("result: INCONCLUSIVE at k=%d (vertex budget exhausted; nothing is claimed for this k)\n",
                  rows.back().first);
      return kExitInconclusive;
  }
  return kExitInconclusive;
}

struct CheckFlags {
  std::string in;
  int k = 0;
  std::string forbid = "pow2";
};

int cmd_check(const CheckFlags& f) {
  auto spec = parse_forbid(f.forbid);
  egv::Graph g;
  try {
    g = egv::io::parse_any(egv::io::read_file(f.in));
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s: %s\n", f.in.c_str(), e.what());
    return kExitUsage;
  }
  if (g.order() > egv::oracle::kMaxOracleOrder) {
    std::fprintf(stderr, "refusing: order %d exceeds the exhaustive-check limit of %d vertices\n", g.order(),
                 egv::oracle::kMaxOracleOrder);
    return kExitInconclusive;
  }
  auto spectrum = egv::oracle::all_cycle_lengths(g);
  int longest = egv::oracle::longest_induced_path(g);

  std::printf("n=%d m=%d\n", g.order(), g.size());
  std::printf("degree: min=%d max=%d\n", g.min_degree(), g.max_degree());
  std::printf("cycle spectrum:");
  for (int l : spectrum.as_vector()) std::printf(" %d", l);
  std::printf("\n");
  std::printf("forbidden lengths present (%s):", spec.to_string().c_str());
  bool any_forbidden = false;
  for (int l : spectrum.as_vector()) {
    if (spec.is_forbidden(l)) {
      std::printf(" %d", l);
      any_forbidden = true;
    }
  }
  std::printf("%s\n", any_forbidden ? "" : " none");
  std::printf("longest induced path: %d (P_%d-free)\n", longest, longest + 1);
  if (f.k == 0) return kExitVerified;

  std::vector<std::string> reasons;
  if (g.min_degree() < 3) reasons.push_back("min degree " + std::to_string(g.min_degree()) + " < 3");
  if (longest >= f.k) reasons.push_back("has an induced P_" + std::to_string(f.k));
  if (any_forbidden) reasons.push_back("has a forbidden cycle");
  if (reasons.empty() && egv::oracle::is_counterexample(g, f.k, spec)) {
    std::printf("verdict: counterexample-shaped (min degree >= 3, P_%d-free, no cycle of length in %s)\n", f.k,
                spec.to_string().c_str());
    return kExitCounterexample;
  }
  std::string joined;
  for (const auto& r : reasons) joined += (joined.empty() ? "" : "; ") + r;
  std::printf("verdict: not a counterexample (%s)\n", joined.c_str());
  return kExitVerified;
}

int cmd_special(const SearchFlags& f, int max_degree) {
  KRange range = parse_k_range(f.k);
  auto spec = parse_forbid(f.forbid);
  if (!f.out_dir.empty()) fs::create_directories(f.out_dir);
  LogSetup log = make_log(f);
  auto cfg = make_config(f, spec, log.sink.get());
  cfg.degree_cap = max_degree;

  std::printf("# special k=%d..%d forbid=%s max_degree=%d threads=%d max_vertices=%d\n", range.first, range.last,
              spec.to_string().c_str(), max_degree, f.threads,
              f.max_vertices > 0 ? f.max_vertices : egv::kMaxVertices);
  std::vector<egv::Certificate> all;
  std::vector<std::pair<int, egv::SearchOutcome>> rows;
  bool truncated = false;
  for (int k = range.first; k <= range.last; ++k) {
    auto out = egv::special_search(k, cfg);
    print_row(k, spec, out);
    truncated = truncated || out.truncated;
    for (auto& c : out.certificates) all.push_back(c);
    rows.emplace_back(k, std::move(out));
  }
  if (f.stats) print_stats_table(rows);

  std::vector<egv::Graph> graphs;
  for (const auto& c : all) graphs.push_back(c.graph);
  auto classes = egv::oracle::isomorphism_classes(graphs);
  std::sort(classes.begin(), classes.end(), [&](const auto& a, const auto& b) {
    return graphs[a.front()].order() < graphs[b.front()].order();
  });
  const egv::Graph fixture = egv::fixtures::markstrom();
  int min_order = 0;
  int at_min = 0;
  std::vector<egv::Certificate> representatives;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& rep = all[classes[i].front()];
    const auto& g = rep.graph;
    if (i == 0) min_order = g.order();
    if (g.order() == min_order) ++at_min;
    bool c16 = rep.spectrum ? rep.spectrum->contains(16) : egv::oracle::all_cycle_lengths(g).contains(16);
    std::printf("class=%zu order=%d members=%zu k=%d cycle16=%s markstrom=%s graph6=%s\n", i + 1, g.order(),
                classes[i].size(), rep.k, c16 ? "yes" : "no",
                egv::oracle::are_isomorphic(g, fixture) ? "yes" : "no", egv::io::emit_graph6(g).c_str());
    representatives.push_back(rep);
  }
  for (const auto& path : write_certificates(f.out_dir, "class", range.first, representatives, spec)) {
    std::printf("certificate_file=%s\n", path.c_str());
  }
  if (classes.empty()) {
    if (truncated) {
      std::printf("result: INCONCLUSIVE (no certificates within the vertex budget)\n");
      return kExitInconclusive;
    }
    std::printf("result: COMPLETE (search space exhausted, no certificates)\n");
    return kExitVerified;
  }
  std::printf("result: minimum order %d with %d isomorphism class%s\n", min_order, at_min, at_min == 1 ? "" : "es");
  return kExitVerified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exhaustive search for P_k-free counterexamples to the Erdos-Gyarfas conjecture"};
  app.require_subcommand(1);

  SearchFlags verify_flags;
  auto* verify = app.add_subcommand("verify", "run the search from P_k for each k in a range");
  add_search_flags(verify, verify_flags);

  CheckFlags check_flags;
  auto* check = app.add_subcommand("check", "report oracle-checked properties of a graph file");
  check->add_option("--in", check_flags.in, "edge-list or graph6 file")->required();
  check->add_option("--k", check_flags.k, "induced-path bound for the counterexample verdict")
      ->check(CLI::Range(3, egv::kMaxVertices));
  check->add_option("--forbid", check_flags.forbid, "pow2 or a list like 4,8")->capture_default_str();

  SearchFlags special_flags;
  special_flags.k = "18";
  special_flags.forbid = "4,8";
  special_flags.max_vertices = 24;
  int max_degree = 3;
  auto* special = app.add_subcommand("special", "collect all degree-capped counterexamples within a vertex budget");
  add_search_flags(special, special_flags);
  special->add_option("--max-degree", max_degree, "degree cap")->check(CLI::Range(3, egv::kMaxVertices))->capture_default_str();

  try {
    app.parse(argc, argv);
    if (*verify) return cmd_verify(verify_flags);
    if (*check) return cmd_check(check_flags);
    if (*special) return cmd_special(special_flags, max_degree);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
