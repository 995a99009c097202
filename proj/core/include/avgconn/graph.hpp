#pragma once

#include "avgconn/vertex_set.hpp"

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace avgconn {

/// Invalid graph construction or a graph that violates an operation's
/// structural precondition (disconnected, not a tree, ...).
class GraphError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed serialized input. offset() is the byte offset of the problem.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t offset);
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

/// An operation would need more than it supports (mask width, n! search, ...).
class CapacityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  int u = 0;
  int v = 0;
  bool operator==(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1; immutable once built.
/// Neighbor lists are sorted. For n <= 64 every row is also kept as a mask.
class Graph {
public:
  /// Throws GraphError on n < 1, out-of-range endpoints, loops and repeated edges.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  int order() const { return static_cast<int>(offsets_.size()) - 1; }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const int> neighbors(int v) const {
    const auto i = static_cast<std::size_t>(checked(v));
    return std::span<const int>(targets_).subspan(offsets_[i], offsets_[i + 1] - offsets_[i]);
  }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  int min_degree() const;
  int max_degree() const;
  bool adjacent(int u, int v) const;

  bool has_masks() const { return !masks_.empty(); }
  /// Requires has_masks().
  VertexSet neighbor_mask(int v) const { return VertexSet{masks_[checked(v)]}; }
  std::span<const std::uint64_t> mask_rows() const { return masks_; }
  /// Requires has_masks().
  VertexSet all_vertices() const { return VertexSet::first(order()); }

  /// Edges with u < v, sorted.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const { return offsets_ == other.offsets_ && targets_ == other.targets_; }

private:
  int checked(int v) const;

  // Sorted neighbours of v are targets_[offsets_[v] .. offsets_[v + 1]).
  std::vector<std::size_t> offsets_{0};
  std::vector<int> targets_;
  std::vector<std::uint64_t> masks_;
  std::size_t edge_count_ = 0;
};

/// Throws CapacityError unless g.order() <= 64.
void require_masks(const Graph& g, std::string_view who);

enum class GraphFormat { graph6, edge_list };

/// Parses a single graph. graph6 accepts an optional ">>graph6<<" header and
/// one trailing newline; orders above 62 are rejected. Edge lists ignore text
/// from "#" to the end of the line.
Graph parse_graph(std::string_view input, GraphFormat format);

/// graph6 encoding (no header, no newline). Throws CapacityError for n > 62.
std::string to_graph6(const Graph& g);

/// "n\nu v\n..." with edges in the order of Graph::edges().
std::string to_edge_list(const Graph& g);

/// Hop distances; entries equal to kInfinity mark unreachable pairs.
class DistanceMatrix {
public:
  static constexpr int kInfinity = std::numeric_limits<int>::max();

  explicit DistanceMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, kInfinity) {}

  int order() const { return n_; }
  int operator()(int u, int v) const { return data_[index(u, v)]; }
  int& at(int u, int v) { return data_[index(u, v)]; }
  bool all_finite() const;

private:
  std::size_t index(int u, int v) const { return static_cast<std::size_t>(u) * n_ + v; }

  int n_;
  std::vector<int> data_;
};

/// BFS distances from `source`; DistanceMatrix::kInfinity when unreachable.
std::vector<int> bfs_distances(const Graph& g, int source);
DistanceMatrix distance_matrix(const Graph& g);

bool is_connected(const Graph& g);
/// Component index per vertex, numbered in order of lowest member.
std::vector<int> component_labels(const Graph& g);
/// Whether `s` induces a connected subgraph. The empty set is not connected.
bool induces_connected(const Graph& g, VertexSet s);

bool is_tree(const Graph& g);
bool is_path(const Graph& g);

/// A shortest path realizing the diameter.
struct PathWitness {
  std::vector<int> vertices;  // v0, v1, ..., v_len

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  int front() const { return vertices.front(); }
  int back() const { return vertices.back(); }
  /// Position of v on the path, or -1.
  int index_of(int v) const;
  VertexSet as_set() const;
  bool operator==(const PathWitness&) const = default;
};

/// Lexicographically least pair (v0 < vl) at maximum distance, joined by the
/// path found by BFS from v0 exploring neighbors in ascending order.
/// Throws GraphError on disconnected input.
PathWitness diametral_path(const Graph& g);

/// Whether g - v is disconnected. Always false for n = 1.
/// Throws GraphError if g is disconnected, std::out_of_range on bad v.
bool is_cutvertex(const Graph& g, int v);

/// g - v with the remaining vertices relabeled 0..n-2 in their original order.
/// Throws GraphError when n = 1.
Graph delete_vertex(const Graph& g, int v);

/// Induced subgraph on `keep` (ascending), relabeled 0..k-1.
Graph induced_subgraph(const Graph& g, std::span<const int> keep);

}  // namespace avgconn
