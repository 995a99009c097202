#include "avgconn/families.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace avgconn {

Graph make_path(int n) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(std::max(n - 1, 0)));
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

Graph make_complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, edges);
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph(n, edges);
}

Graph make_star(int leaves) {
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph(leaves + 1, edges);
}

Graph make_wheel(int rim) {
  if (rim < 3) throw std::invalid_argument("wheel needs a rim of at least 3 vertices");
  std::vector<Edge> edges;
  for (int v = 1; v <= rim; ++v) {
    edges.push_back({0, v});
    edges.push_back({v, v == rim ? 1 : v + 1});
  }
  return Graph(rim + 1, edges);
}

Graph make_spider(std::span<const int> legs) {
  std::vector<Edge> edges;
  int next = 1;
  for (int len : legs) {
    if (len < 1) throw std::invalid_argument("spider legs must have length at least 1");
    int prev = 0;
    for (int k = 0; k < len; ++k, ++next) {
      edges.push_back({prev, next});
      prev = next;
    }
  }
  return Graph(next, edges);
}

Graph make_wheel_minus_spoke(int rim) {
  if (rim < 4) throw std::invalid_argument("wheel minus spoke needs a rim of at least 4 vertices");
  std::vector<Edge> edges;
  for (int v = 2; v <= rim; ++v) edges.push_back({0, v});
  for (int v = 1; v < rim; ++v) edges.push_back({v, v + 1});
  return Graph(rim + 1, edges);
}

Graph with_edges(const Graph& g, std::span<const Edge> extra) {
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : extra) {
    if (!g.adjacent(e.u, e.v)) edges.push_back(e);
  }
  return Graph(g.order(), edges);
}

}  // namespace avgconn
