#pragma once

#include "avgconn/graph.hpp"
#include "avgconn/numeric.hpp"
#include "avgconn/vertex_set.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace avgconn {

/// Number of connected sets, the sum of their orders, and the exact average.
struct ConnStats {
  BigInt count;
  BigInt total_order;
  Rational average;

  static ConnStats from_totals(BigInt count, BigInt total_order);
  bool operator==(const ConnStats&) const = default;
};

/// Same quantities restricted to the connected sets containing `vertex`.
struct LocalStats {
  int vertex = 0;
  BigInt count;
  BigInt total_order;
  Rational average;

  static LocalStats from_totals(int vertex, BigInt count, BigInt total_order);
  bool operator==(const LocalStats&) const = default;
};

namespace detail {

// Binary branching over candidate vertices: every connected superset of `set`
// that avoids `excluded` and stays inside `allowed` is visited exactly once.
template <class Visit>
void extend_connected(const std::uint64_t* rows, std::uint64_t set, std::uint64_t candidates,
                      std::uint64_t excluded, std::uint64_t allowed, Visit& visit) {
  visit(VertexSet{set});
  while (candidates != 0) {
    const int v = std::countr_zero(candidates);
    const std::uint64_t bit = std::uint64_t{1} << v;
    candidates &= ~bit;
    const std::uint64_t grown = set | bit;
    extend_connected(rows, grown, (candidates | rows[v]) & allowed & ~grown & ~excluded, excluded,
                     allowed, visit);
    excluded |= bit;
  }
}

inline std::uint64_t above(int r) {
  return r >= 63 ? 0 : ~std::uint64_t{0} << (r + 1);
}

}  // namespace detail

/// Calls visit(VertexSet) once for every connected set of g. Sets are produced
/// root by root in ascending order of their minimum vertex, each root's sets
/// in depth-first, lowest-candidate-first order. Requires n <= 64.
template <class Visit>
void for_each_connected_set(const Graph& g, Visit&& visit) {
  require_masks(g, "connected-set enumeration");
  const auto rows = g.mask_rows();
  const std::uint64_t all = g.all_vertices().bits();
  for (int r = 0; r < g.order(); ++r) {
    const std::uint64_t allowed = all & detail::above(r);
    detail::extend_connected(rows.data(), std::uint64_t{1} << r, rows[r] & allowed, 0, allowed,
                             visit);
  }
}

/// Calls visit(VertexSet) once for every connected set of g containing v.
template <class Visit>
void for_each_connected_set_containing(const Graph& g, int v, Visit&& visit) {
  require_masks(g, "connected-set enumeration");
  if (v < 0 || v >= g.order()) throw std::out_of_range("vertex out of range");
  const auto rows = g.mask_rows();
  const std::uint64_t all = g.all_vertices().bits();
  detail::extend_connected(rows.data(), std::uint64_t{1} << v, rows[v], 0, all, visit);
}

/// Every connected set, in enumeration order.
std::vector<VertexSet> connected_sets(const Graph& g);

/// N(G), total order and A(G). Throws GraphError if g is disconnected.
ConnStats stats(const Graph& g);

/// N(G;v), total order and A(G;v). Throws GraphError if g is disconnected.
LocalStats local_stats(const Graph& g, int v);
std::vector<LocalStats> local_stats_all(const Graph& g);

/// Number and average size of the sets U of h such that U is empty or every
/// component of h[U] meets `seeds`. The empty set is counted.
struct SeededAverage {
  BigInt count;
  Rational average;
};

/// Throws std::invalid_argument unless `seeds` meets every component of h.
/// Requires h.order() <= 63.
SeededAverage seeded_average(const Graph& h, VertexSet seeds);

/// Per-vertex comparison of A(G;v) against (n+1)/2.
struct LocalBoundRow {
  int vertex = 0;
  Rational average;
  Rational bound;
  bool pass = false;
  bool equality = false;
};

std::vector<LocalBoundRow> check_local_bound(const Graph& g);

/// Whether g, after deleting every edge between two neighbours of v, is a
/// tree in which each vertex other than v has degree at most 2.
bool is_spider_plus_neighbor_edges(const Graph& g, int v);

}  // namespace avgconn
