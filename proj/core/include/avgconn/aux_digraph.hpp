#pragma once

#include "avgconn/graph.hpp"
#include "avgconn/numeric.hpp"
#include "avgconn/vertex_set.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace avgconn {

// The coloured successor digraph on the connected sets of a graph G, relative
// to a fixed diametral path P = v0 ... vl.
//
// Every connected set S gets at most one red and at most one blue successor,
// each S plus one vertex:
//   d(S, P) >= 2  both colours go to S + x, where x is adjacent to S and one
//                 step closer to P (lowest index unless a selector is given);
//   d(S, P) <= 1  red goes to S + v_i for the least i with v_i adjacent to S
//                 (none if v0 is in S); blue to S + v_j for the greatest such j
//                 (none if vl is in S).
// Red chains end at sets containing v0 and blue chains at sets containing vl.

enum class Color : std::uint8_t { red, blue };

const char* to_string(Color c);

/// Chooses x for a set at distance >= 2 from the path. `admissible` is never
/// empty; the result must be one of its members.
using StepSelector = std::function<int(VertexSet set, VertexSet admissible)>;

struct AuxOptions {
  int max_order = 24;
  /// Accept any connected graph with n >= 2, including paths and complete
  /// graphs. Claim verification still refuses such digraphs.
  bool relaxed = false;
  StepSelector select;
};

/// Input outside 2 <= diam(G) <= n-2, or above AuxOptions::max_order.
class RegimeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kNoNode = -1;
inline constexpr int kNoVertex = -1;

struct AuxDigraph {
  Graph graph;
  PathWitness path;
  bool relaxed = false;
  /// Every connected set of graph, sorted by (size, bits).
  std::vector<VertexSet> nodes;
  std::vector<int> red_succ;
  std::vector<int> blue_succ;
  /// Vertex added by the far rule, kNoVertex for sets within distance 1 of P.
  std::vector<int> chosen_x;
  /// d(v, V(P)) for every vertex of graph.
  std::vector<int> path_distance;
  std::unordered_map<std::uint64_t, int> index;

  std::size_t size() const { return nodes.size(); }
  /// Node index of s, or kNoNode.
  int find(VertexSet s) const;
  int successor(int node, Color c) const { return c == Color::red ? red_succ[node] : blue_succ[node]; }
  int& successor(int node, Color c) { return c == Color::red ? red_succ[node] : blue_succ[node]; }
  /// d(S, V(P)).
  int distance_to_path(VertexSet s) const;
  bool operator==(const AuxDigraph& other) const;
};

/// Throws GraphError on disconnected input, RegimeError outside the regime.
AuxDigraph build_aux_digraph(const Graph& g, const AuxOptions& options = {});

struct CheckFailure {
  std::string rule;
  VertexSet set;
  std::string detail;
};

struct StructureReport {
  std::vector<CheckFailure> failures;
  std::size_t red_paths = 0;
  std::size_t blue_paths = 0;
  BigInt connected_sets;      // N(G)
  BigInt containing_start;    // N(G; v0)
  BigInt containing_end;      // N(G; vl)
  BigInt red_length_sum;
  BigInt blue_length_sum;
  Rational mean_red_length;
  Rational mean_blue_length;

  bool ok() const { return failures.empty(); }
};

/// Degree rules, construction rules, chain decomposition and the forest
/// identities relating chain counts and lengths to N(G), N(G;v0), N(G;vl).
StructureReport verify_structure(const AuxDigraph& digraph);

enum class TopKind : std::uint8_t { high, low, normal };

const char* to_string(TopKind k);

/// A node with no incoming edge of `color`, i.e. the start of a chain.
struct Top {
  VertexSet set;
  Color color = Color::red;
  int length = 0;  // edges on the chain starting at set
  TopKind kind = TopKind::normal;
  VertexSet residue;    // normal: set minus V(P)
  VertexSet interior;   // normal: set ∩ {v_k : first_touch < k < last_touch}
  VertexSet extension;  // high: first set on the chain adjacent to P
  int extension_steps = -1;  // high: edges from set to extension
  int first_touch = -1; // least path index adjacent to residue / extension
  int last_touch = -1;  // greatest such index
};

/// Count and total chain length of a family of tops.
struct LengthTally {
  std::size_t count = 0;
  long long length_sum = 0;

  void add(int length) {
    ++count;
    length_sum += length;
  }
  /// Mean length; 0 for an empty family.
  Rational mean() const;
};

struct ResidueGroup {
  VertexSet residue;
  VertexSet interior;
  int first_touch = -1;
  int last_touch = -1;
  LengthTally tally;
};

struct MuReport {
  LengthTally all, red, blue, high, normal, low;
  /// Normal tops grouped by (residue, interior), ordered by those keys.
  std::vector<ResidueGroup> groups;
};

struct TopCensus {
  std::vector<Top> tops;  // ordered by node, red before blue
  MuReport mu;
};

TopCensus classify_tops(const AuxDigraph& digraph);

struct ClaimReport {
  std::vector<CheckFailure> failures;
  std::size_t sets_meeting_path = 0;
  std::size_t sets_off_path = 0;
  std::size_t residue_groups = 0;
  std::size_t extensions = 0;
  Rational mean_all;
  Rational bound;  // (n-1)/2

  bool ok() const { return failures.empty(); }
};

/// Checks the top characterizations, the per-group and per-residue mean
/// bounds, the extension bookkeeping, the low-top census, both decompositions
/// of the overall mean, and mean_all < (n-1)/2. Throws RegimeError on
/// digraphs built with relaxed options outside the regime.
ClaimReport verify_claims(const AuxDigraph& digraph, const TopCensus& census);

/// Text listing of the weakly connected component of the digraph containing
/// `member`:
///
///   component {a}: 7 nodes, 9 edges
///   {a} -> {a,b} R x=b
///   ...
///
/// One line per edge, sources in node order, red before blue. Vertices print
/// as labels[v] when labels are given, otherwise as indices.
std::string dump_component(const AuxDigraph& digraph, VertexSet member,
                           std::span<const std::string> labels = {});

/// "{v0,a,b}" / "{0,3,4}"
std::string format_set(VertexSet s, std::span<const std::string> labels = {});

/// A non-cutvertex v with N(G;v) >= 2N(G)/(n+1).
struct HeavyVertexWitness {
  enum class Route : std::uint8_t { complete, path, diametral };

  Route route = Route::diametral;
  int vertex = 0;
  BigInt count_at_vertex;  // N(G;v)
  BigInt count;            // N(G)
  Rational ratio;          // N(G;v)/N(G)
  Rational bound;          // 2/(n+1)
  bool cutvertex = false;
  bool equality = false;
  bool strict = false;
  bool holds = false;      // !cutvertex && ratio >= bound
  /// Whether the diametral path endpoints v0 / vl individually satisfy it.
  bool start_satisfies = false;
  bool end_satisfies = false;
};

/// Throws std::invalid_argument when n < 3, GraphError when disconnected.
HeavyVertexWitness heavy_vertex_witness(const Graph& g);

}  // namespace avgconn
