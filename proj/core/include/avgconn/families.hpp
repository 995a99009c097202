#pragma once

#include "avgconn/graph.hpp"

#include <span>

namespace avgconn {

// Named graph families used by the scans, the CLI and the tests.

Graph make_path(int n);
Graph make_complete(int n);
Graph make_cycle(int n);
/// K_{1,leaves} with the center at vertex 0.
Graph make_star(int leaves);
/// Hub 0 joined to every vertex of the rim cycle 1..rim.
Graph make_wheel(int rim);
/// Spider centred at 0 with the given leg lengths.
Graph make_spider(std::span<const int> legs);
/// Wheel on `rim` rim vertices with the spoke to rim vertex 1 removed and the
/// rim edge between vertices 1 and `rim` removed, leaving vertex 1 as a
/// pendant of vertex 2.
Graph make_wheel_minus_spoke(int rim);

/// Adds the given edges to g (existing edges are kept).
Graph with_edges(const Graph& g, std::span<const Edge> extra);

}  // namespace avgconn
