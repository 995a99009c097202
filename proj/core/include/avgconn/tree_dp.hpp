#pragma once

#include "avgconn/connected_sets.hpp"
#include "avgconn/graph.hpp"
#include "avgconn/numeric.hpp"

#include <vector>

namespace avgconn {

/// (number of subtrees, sum of their orders): the value carried by the
/// subtree DP. Product combines independent choices; the option of leaving
/// a branch out is the pair (1, 0).
struct SubtreeTally {
  BigInt count;
  BigInt total_order;

  static SubtreeTally single() { return {1, 1}; }
  /// This branch is either absent or one of the tallied subtrees.
  SubtreeTally optional_branch() const { return {count + 1, total_order}; }
  SubtreeTally& operator*=(const SubtreeTally& other);
};

SubtreeTally operator*(SubtreeTally lhs, const SubtreeTally& rhs);

/// N(T), total order and A(T) in O(n) arithmetic operations. No order cap.
/// Throws GraphError if t is not a tree.
ConnStats tree_stats(const Graph& t);

/// N(T;v) and A(T;v) for every vertex, via one rerooting pass.
std::vector<LocalStats> tree_local_stats_all(const Graph& t);

/// Closed form for the path on n vertices: (n(n+1)/2, n(n+1)(n+2)/6, (n+2)/3).
/// Throws std::invalid_argument when n < 1.
ConnStats path_closed_form(long long n);

}  // namespace avgconn
