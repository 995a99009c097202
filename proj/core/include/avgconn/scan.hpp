#pragma once

#include "avgconn/aux_digraph.hpp"
#include "avgconn/graph.hpp"
#include "avgconn/numeric.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace avgconn {

/// Everything measured about one scanned graph.
struct GraphRow {
  std::string graph6;
  int n = 0;
  BigInt count;
  BigInt total_order;
  Rational average;
  /// min over v of A(G;v) and the least vertex attaining it.
  Rational min_local_average;
  int min_local_vertex = 0;
  /// Present when n >= 3.
  std::optional<int> heavy_vertex;
  std::optional<Rational> heavy_ratio;
};

struct Violation {
  std::string graph6;
  std::string check;
  std::string detail;
};

/// A notable observation that is data rather than a failure.
struct Finding {
  std::string kind;
  std::string graph6;
  int vertex = -1;
  std::optional<Rational> value;
  std::string note;
};

enum class ScanKind { theorem, lemmas, conjectures };

const char* to_string(ScanKind k);

struct ScanReport {
  ScanKind kind = ScanKind::theorem;
  int n = 0;
  std::size_t graphs_checked = 0;
  std::optional<Rational> min_average;
  std::vector<std::string> minimizers;
  std::vector<Violation> violations;
  std::vector<GraphRow> rows;  // sorted by graph6
  std::vector<Finding> findings;
  std::map<std::string, std::size_t> counters;

  bool passed() const { return violations.empty(); }
};

struct ScanOptions {
  int jobs = 1;
  AuxOptions aux;
  /// Corrupts one red edge of every auxiliary digraph before verification.
  /// Exists so the failure path can be exercised end to end.
  bool inject_fault = false;
};

/// A(G) >= (n+2)/3 for every graph, with equality exactly for the path.
ScanReport scan_theorem(std::span<const Graph> graphs, int n, const ScanOptions& options = {});

/// Local bound for every vertex, the heavy non-cutvertex witness, and, for
/// graphs with 2 <= diam <= n-2, the auxiliary digraph structure and claims.
ScanReport scan_lemmas(std::span<const Graph> graphs, int n, const ScanOptions& options = {});

/// Minimum-degree-3 gap A(G) - n/2, complete-graph closed form, and the
/// vertex-transitive cubic identity. Findings only; never violations except
/// for rejected inputs and closed-form mismatches.
ScanReport scan_conjectures(std::span<const Graph> graphs, int n, const ScanOptions& options = {});

/// n * 2^(n-1) / (2^n - 1).
Rational complete_graph_average(int n);

/// Bound used for vertex-transitive cubic graphs: A(G)/n < 0.95831.
Rational cubic_ratio_ceiling();

inline constexpr const char* kCsvHeader =
    "graph6,n,N,total,A_num,A_den,lemma2_min_vertex_avg,lemma3_witness,lemma3_ratio_num,"
    "lemma3_ratio_den";

void write_csv(std::ostream& out, const ScanReport& report);
nlohmann::json to_json(const ScanReport& report);

/// Runs fn(i) for i in [0, count) on `jobs` workers. Each index runs exactly
/// once; callers write into per-index slots.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace avgconn
