#include "avgconn/scan.hpp"

#include "avgconn/connected_sets.hpp"
#include "avgconn/generate.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

namespace avgconn {

const char* to_string(ScanKind k) {
  switch (k) {
    case ScanKind::theorem: return "theorem";
    case ScanKind::lemmas: return "lemmas";
    case ScanKind::conjectures: return "conjectures";
  }
  return "?";
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  const auto workers = static_cast<std::size_t>(std::max(1, jobs));
  if (workers == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < std::min(workers, count); ++w) {
    threads.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          const std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

Rational complete_graph_average(int n) {
  const BigInt half = BigInt(1) << (n - 1);
  return ratio(BigInt(n) * half, 2 * half - 1);
}

Rational cubic_ratio_ceiling() { return Rational(95831, 100000); }

namespace {

// Per-graph output of a scan worker.
struct GraphResult {
  std::size_t input_index = 0;
  std::string graph6;
  std::optional<GraphRow> row;
  std::vector<LocalStats> locals;
  std::vector<Violation> violations;
  std::vector<Finding> findings;
  std::map<std::string, std::size_t> counters;
  std::optional<Rational> gap;  // conjecture scan: A(G) - n/2 for min degree >= 3
};

bool validate(const Graph& g, int n, GraphResult& result) {
  if (g.order() != n) {
    result.violations.push_back({result.graph6, "input-order", "order " + std::to_string(g.order()) + ", expected " + std::to_string(n)});
    return false;
  }
  if (!is_connected(g)) {
    result.violations.push_back({result.graph6, "input-connected", "graph is disconnected"});
    return false;
  }
  return true;
}

GraphRow measure(const Graph& g, const std::string& graph6, std::vector<LocalStats>& locals) {
  GraphRow row;
  row.graph6 = graph6;
  row.n = g.order();
  const ConnStats global = stats(g);
  row.count = global.count;
  row.total_order = global.total_order;
  row.average = global.average;
  locals = local_stats_all(g);
  row.min_local_average = locals.front().average;
  row.min_local_vertex = 0;
  for (const LocalStats& l : locals) {
    if (l.average < row.min_local_average) {
      row.min_local_average = l.average;
      row.min_local_vertex = l.vertex;
    }
  }
  if (g.order() >= 3) {
    const HeavyVertexWitness w = heavy_vertex_witness(g);
    row.heavy_vertex = w.vertex;
    row.heavy_ratio = w.ratio;
  }
  return row;
}

void check_theorem(const Graph& g, GraphResult& r) {
  const GraphRow& row = *r.row;
  const Rational bound(g.order() + 2, 3);
  const bool path = is_path(g);
  if (path) ++r.counters["paths"];
  if (row.average < bound) {
    r.violations.push_back({r.graph6, "theorem-bound", "A = " + format_fraction(row.average) + " < " + format_fraction(bound)});
  }
  if ((row.average == bound) != path) {
    r.violations.push_back({r.graph6, "theorem-equality",
                            path ? "path does not attain the bound" : "non-path attains the bound"});
  }
}

void corrupt_one_red_edge(AuxDigraph& h) {
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h.red_succ[i] != kNoNode) {
      h.red_succ[i] = kNoNode;
      return;
    }
  }
}

void check_lemmas(const Graph& g, const ScanOptions& options, GraphResult& r) {
  const int n = g.order();
  const Rational local_bound(n + 1, 2);
  for (const LocalStats& l : r.locals) {
    const bool spider = is_spider_plus_neighbor_edges(g, l.vertex);
    if (l.average < local_bound) {
      r.violations.push_back({r.graph6, "local-bound", "vertex " + std::to_string(l.vertex) + ": A(G;v) = " +
                                                           format_fraction(l.average) + " < " + format_fraction(local_bound)});
    }
    if (spider && l.average != local_bound) {
      r.violations.push_back({r.graph6, "local-tightness", "spider-plus-neighbour-edges instance at vertex " +
                                                               std::to_string(l.vertex) + " is not tight"});
    }
    if (l.average == local_bound) {
      ++r.counters[spider ? "local_equalities_spider" : "local_equalities_other"];
      r.findings.push_back({"local-equality", r.graph6, l.vertex, l.average,
                            spider ? "spider-plus-neighbour-edges" : "other"});
    }
  }

  if (n >= 3) {
    const HeavyVertexWitness w = heavy_vertex_witness(g);
    const bool path = is_path(g);
    if (!w.holds) {
      r.violations.push_back({r.graph6, "heavy-vertex", "vertex " + std::to_string(w.vertex) + ": ratio " +
                                                            format_fraction(w.ratio) + (w.cutvertex ? " (cutvertex)" : "")});
    }
    if (w.equality != path) {
      r.violations.push_back({r.graph6, "heavy-vertex-equality",
                              path ? "path endpoint is not tight" : "non-path attains equality"});
    }
    if (w.route == HeavyVertexWitness::Route::diametral) {
      ++r.counters["diametral_route"];
      if (w.start_satisfies) ++r.counters["diametral_start_satisfies"];
      if (w.end_satisfies) ++r.counters["diametral_end_satisfies"];
    }
    if (!path) {
      const BigInt target = 2 * r.row->count;
      for (const LocalStats& l : r.locals) {
        if (l.count * (n + 1) == target && !is_cutvertex(g, l.vertex)) {
          ++r.counters["nonpath_noncut_equalities"];
          r.findings.push_back({"nonpath-noncut-equality", r.graph6, l.vertex, ratio(l.count, r.row->count), ""});
        }
      }
    }

    const int diam = diametral_path(g).length();
    if (diam >= 2 && diam <= n - 2 && n <= options.aux.max_order) {
      AuxDigraph h = build_aux_digraph(g, options.aux);
      if (options.inject_fault) corrupt_one_red_edge(h);
      ++r.counters["aux_checked"];
      const StructureReport structure = verify_structure(h);
      for (const CheckFailure& f : structure.failures) {
        r.violations.push_back({r.graph6, "aux-structure:" + f.rule, format_set(f.set) + " " + f.detail});
      }
      const ClaimReport claims = verify_claims(h, classify_tops(h));
      for (const CheckFailure& f : claims.failures) {
        r.violations.push_back({r.graph6, "aux-claims:" + f.rule, format_set(f.set) + " " + f.detail});
      }
    }
  }
}

void check_conjectures(const Graph& g, GraphResult& r) {
  const int n = g.order();
  const Rational average = r.row->average;
  if (g.min_degree() >= 3) {
    ++r.counters["min_degree_3"];
    r.gap = average - Rational(n, 2);
    if (*r.gap < 0) {
      ++r.counters["min_degree_3_below_half"];
      r.findings.push_back({"min-degree-3-counterexample", r.graph6, -1, *r.gap, "A(G) < n/2"});
    }
  }
  if (g.edge_count() == static_cast<std::size_t>(n) * (n - 1) / 2) {
    ++r.counters["complete"];
    if (average != complete_graph_average(n)) {
      r.violations.push_back({r.graph6, "complete-closed-form", "A = " + format_fraction(average)});
    }
  }
  if (g.min_degree() == 3 && g.max_degree() == 3 && is_vertex_transitive(g)) {
    ++r.counters["vertex_transitive_cubic"];
    const Rational per_vertex = average / n;
    for (const LocalStats& l : r.locals) {
      if (ratio(l.count, r.row->count) != per_vertex) {
        r.violations.push_back({r.graph6, "vertex-transitive-identity",
                                "vertex " + std::to_string(l.vertex) + ": N(G;v)/N(G) != A(G)/n"});
      }
    }
    if (!(per_vertex < cubic_ratio_ceiling())) {
      r.violations.push_back({r.graph6, "cubic-ratio", "A(G)/n = " + format_fraction(per_vertex)});
    }
    r.findings.push_back({"vertex-transitive-cubic", r.graph6, -1, per_vertex, "A(G)/n"});
  }
}

ScanReport run_scan(ScanKind kind, std::span<const Graph> graphs, int n, const ScanOptions& options) {
  std::vector<GraphResult> results(graphs.size());
  parallel_for(graphs.size(), options.jobs, [&](std::size_t i) {
    const Graph& g = graphs[i];
    GraphResult& r = results[i];
    r.input_index = i;
    r.graph6 = g.order() <= 62 ? to_graph6(g) : to_edge_list(g);
    if (!validate(g, n, r)) return;
    r.row = measure(g, r.graph6, r.locals);
    switch (kind) {
      case ScanKind::theorem: check_theorem(g, r); break;
      case ScanKind::lemmas: check_lemmas(g, options, r); break;
      case ScanKind::conjectures: check_conjectures(g, r); break;
    }
  });

  std::sort(results.begin(), results.end(), [](const GraphResult& a, const GraphResult& b) {
    return a.graph6 != b.graph6 ? a.graph6 < b.graph6 : a.input_index < b.input_index;
  });

  ScanReport report;
  report.kind = kind;
  report.n = n;
  std::optional<Rational> min_gap;
  std::string min_gap_graph;
  for (GraphResult& r : results) {
    for (auto& v : r.violations) report.violations.push_back(std::move(v));
    for (auto& f : r.findings) report.findings.push_back(std::move(f));
    for (const auto& [name, value] : r.counters) report.counters[name] += value;
    if (!r.row) {
      ++report.counters["rejected"];
      continue;
    }
    ++report.graphs_checked;
    const Rational& a = r.row->average;
    if (!report.min_average || a < *report.min_average) {
      report.min_average = a;
      report.minimizers.clear();
    }
    if (a == *report.min_average) report.minimizers.push_back(r.graph6);
    if (r.gap && (!min_gap || *r.gap < *min_gap)) {
      min_gap = r.gap;
      min_gap_graph = r.graph6;
    }
    report.rows.push_back(std::move(*r.row));
  }
  if (kind == ScanKind::conjectures && min_gap) {
    report.findings.push_back({"min-degree-3-min-gap", min_gap_graph, -1, min_gap, "min over min-degree-3 graphs of A(G) - n/2"});
  }
  return report;
}

}  // namespace

ScanReport scan_theorem(std::span<const Graph> graphs, int n, const ScanOptions& options) {
  return run_scan(ScanKind::theorem, graphs, n, options);
}

ScanReport scan_lemmas(std::span<const Graph> graphs, int n, const ScanOptions& options) {
  return run_scan(ScanKind::lemmas, graphs, n, options);
}

ScanReport scan_conjectures(std::span<const Graph> graphs, int n, const ScanOptions& options) {
  return run_scan(ScanKind::conjectures, graphs, n, options);
}

}  // namespace avgconn
