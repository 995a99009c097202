#pragma once

#include "avgconn/graph.hpp"

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

namespace avgconn {

/// Largest order accepted by canonical_form (n(n-1)/2 bits must fit a word).
inline constexpr int kMaxCanonicalOrder = 11;
/// Largest order produced by the built-in generators.
inline constexpr int kMaxGeneratedOrder = 7;

struct CanonicalForm {
  /// Upper-triangle bits in graph6 order (x(0,1), x(0,2), x(1,2), ...), first
  /// bit most significant, minimized over all vertex permutations.
  std::uint64_t key = 0;
  /// labeling[p] = original vertex placed at position p.
  std::vector<int> labeling;
};

/// Exact canonical form by branch-and-bound over all n! labelings.
/// Throws CapacityError for n > kMaxCanonicalOrder.
CanonicalForm canonical_form(const Graph& g);

/// g relabeled by its canonical labeling.
Graph canonical_graph(const Graph& g);

/// Number of automorphisms, by exhaustive search. Small n only.
std::uint64_t automorphism_count(const Graph& g);

/// Whether some automorphism maps 0 to every vertex.
bool is_vertex_transitive(const Graph& g);

/// One canonical representative per isomorphism class of connected graphs
/// of order n, sorted by canonical key. Throws CapacityError for
/// n > kMaxGeneratedOrder; larger corpora go through read_graph6_corpus.
std::vector<Graph> generate_connected_graphs(int n);

/// All graphs of order n (connected or not), same conventions.
std::vector<Graph> generate_graphs(int n);

/// One canonical representative per isomorphism class of trees of order n.
/// Throws CapacityError for n > kMaxCanonicalOrder.
std::vector<Graph> generate_free_trees(int n);

/// Every graph obtained from a graph in `base` by adding one vertex joined to
/// a subset of the existing vertices (nonempty when connected_only), deduped
/// by canonical form and sorted by key.
std::vector<Graph> extend_by_vertex(const std::vector<Graph>& base, bool connected_only);

/// One graph6 string per nonblank line. Throws ParseError with the line
/// number in the message.
std::vector<Graph> read_graph6_corpus(std::istream& in);

}  // namespace avgconn
