#include "avgconn/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace avgconn {

ParseError::ParseError(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

Graph::Graph(int n, std::span<const Edge> edges) {
  if (n < 1) throw GraphError("graph order must be at least 1");
  const auto order = static_cast<std::size_t>(n);
  offsets_.assign(order + 1, 0);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw GraphError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                       " out of range for order " + std::to_string(n));
    }
    if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < order; ++v) offsets_[v + 1] += offsets_[v];
  targets_.resize(offsets_[order]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges) {
    targets_[fill[e.u]++] = e.v;
    targets_[fill[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < order; ++v) {
    const auto first = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    const auto last = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last) throw GraphError("repeated edge at vertex " + std::to_string(v));
  }
  edge_count_ = targets_.size() / 2;
  if (n <= kMaxMaskOrder) {
    masks_.assign(order, 0);
    for (int v = 0; v < n; ++v) {
      for (int w : neighbors(v)) masks_[v] |= std::uint64_t{1} << w;
    }
  }
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

int Graph::checked(int v) const {
  if (v < 0 || v >= order()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  return v;
}

int Graph::min_degree() const {
  int best = order();
  for (int v = 0; v < order(); ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < order(); ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::adjacent(int u, int v) const {
  if (has_masks()) return (masks_[checked(u)] >> checked(v)) & 1U;
  const auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), checked(v));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order(); ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

void require_masks(const Graph& g, std::string_view who) {
  if (!g.has_masks()) {
    throw CapacityError(std::string(who) + " supports at most " + std::to_string(kMaxMaskOrder) +
                        " vertices, got " + std::to_string(g.order()));
  }
}

bool DistanceMatrix::all_finite() const {
  return std::none_of(data_.begin(), data_.end(), [](int d) { return d == kInfinity; });
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), DistanceMatrix::kInfinity);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u)) {
      if (dist[w] == DistanceMatrix::kInfinity) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceMatrix distance_matrix(const Graph& g) {
  DistanceMatrix d(g.order());
  for (int s = 0; s < g.order(); ++s) {
    const auto row = bfs_distances(g, s);
    for (int t = 0; t < g.order(); ++t) d.at(s, t) = row[t];
  }
  return d;
}

std::vector<int> component_labels(const Graph& g) {
  std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.order(); ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u)) {
        if (label[w] < 0) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

bool is_connected(const Graph& g) {
  const auto labels = component_labels(g);
  return std::all_of(labels.begin(), labels.end(), [](int c) { return c == 0; });
}

bool induces_connected(const Graph& g, VertexSet s) {
  if (s.empty()) return false;
  VertexSet reached = VertexSet::singleton(s.lowest());
  VertexSet frontier = reached;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbor_mask(v);
    next = (next & s) - reached;
    reached |= next;
    frontier = next;
  }
  return reached == s;
}

bool is_tree(const Graph& g) {
  return g.edge_count() + 1 == static_cast<std::size_t>(g.order()) && is_connected(g);
}

bool is_path(const Graph& g) { return is_tree(g) && g.max_degree() <= 2; }

int PathWitness::index_of(int v) const {
  const auto it = std::find(vertices.begin(), vertices.end(), v);
  return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

VertexSet PathWitness::as_set() const {
  VertexSet s;
  for (int v : vertices) s.insert(v);
  return s;
}

PathWitness diametral_path(const Graph& g) {
  const int n = g.order();
  int best = -1;
  int start = 0;
  int end = 0;
  for (int u = 0; u < n; ++u) {
    const auto dist = bfs_distances(g, u);
    for (int v = u + 1; v < n; ++v) {
      if (dist[v] == DistanceMatrix::kInfinity) throw GraphError("diametral path of a disconnected graph");
      if (dist[v] > best) {
        best = dist[v];
        start = u;
        end = v;
      }
    }
  }
  if (best < 0) return PathWitness{{0}};

  // Parent = first discoverer, scanning neighbors in ascending order.
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::deque<int> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = u;
        queue.push_back(w);
      }
    }
  }
  PathWitness path;
  for (int v = end; v != -1; v = parent[v]) path.vertices.push_back(v);
  std::reverse(path.vertices.begin(), path.vertices.end());
  return path;
}

Graph induced_subgraph(const Graph& g, std::span<const int> keep) {
  std::vector<int> position(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) position[keep[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (position[e.u] >= 0 && position[e.v] >= 0) edges.push_back({position[e.u], position[e.v]});
  }
  return Graph(static_cast<int>(keep.size()), edges);
}

Graph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  if (g.order() == 1) throw GraphError("cannot delete the only vertex");
  std::vector<int> keep;
  keep.reserve(static_cast<std::size_t>(g.order() - 1));
  for (int u = 0; u < g.order(); ++u) {
    if (u != v) keep.push_back(u);
  }
  return induced_subgraph(g, keep);
}

bool is_cutvertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  if (!is_connected(g)) throw GraphError("cutvertex test needs a connected graph");
  if (g.order() == 1) return false;
  return !is_connected(delete_vertex(g, v));
}

}  // namespace avgconn
