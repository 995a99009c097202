#include "avgconn/aux_digraph.hpp"

#include "avgconn/connected_sets.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace avgconn {

const char* to_string(Color c) { return c == Color::red ? "red" : "blue"; }

const char* to_string(TopKind k) {
  switch (k) {
    case TopKind::high: return "high";
    case TopKind::low: return "low";
    case TopKind::normal: return "normal";
  }
  return "?";
}

int AuxDigraph::find(VertexSet s) const {
  const auto it = index.find(s.bits());
  return it == index.end() ? kNoNode : it->second;
}

int AuxDigraph::distance_to_path(VertexSet s) const {
  int best = DistanceMatrix::kInfinity;
  for (int v : s) best = std::min(best, path_distance[v]);
  return best;
}

bool AuxDigraph::operator==(const AuxDigraph& other) const {
  return graph == other.graph && path == other.path && relaxed == other.relaxed &&
         nodes == other.nodes && red_succ == other.red_succ && blue_succ == other.blue_succ &&
         chosen_x == other.chosen_x && path_distance == other.path_distance;
}

namespace {

VertexSet neighborhood(const Graph& g, VertexSet s) {
  VertexSet out;
  for (int v : s) out |= g.neighbor_mask(v);
  return out - s;
}

std::vector<int> distances_to_path(const Graph& g, const PathWitness& path) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), DistanceMatrix::kInfinity);
  std::deque<int> queue;
  for (int v : path.vertices) {
    dist[v] = 0;
    queue.push_back(v);
  }
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

// Vertices x adjacent to s with d(x, P) = d(s, P) - 1.
VertexSet far_rule_admissible(const AuxDigraph& h, VertexSet s, int distance) {
  VertexSet out;
  for (int x : neighborhood(h.graph, s)) {
    if (h.path_distance[x] == distance - 1) out.insert(x);
  }
  return out;
}

// Path vertex added by the near rule: least (red) or greatest (blue) index
// adjacent to s and outside it; kNoVertex when the chain has ended.
int near_rule_vertex(const AuxDigraph& h, VertexSet s, Color c) {
  const auto& p = h.path.vertices;
  const VertexSet touching = neighborhood(h.graph, s);
  if (c == Color::red) {
    if (s.contains(p.front())) return kNoVertex;
    for (int v : p) {
      if (touching.contains(v)) return v;
    }
  } else {
    if (s.contains(p.back())) return kNoVertex;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
      if (touching.contains(*it)) return *it;
    }
  }
  return kNoVertex;
}

}  // namespace

AuxDigraph build_aux_digraph(const Graph& g, const AuxOptions& options) {
  if (g.order() > options.max_order) {
    throw RegimeError("auxiliary digraph capped at " + std::to_string(options.max_order) +
                      " vertices, got " + std::to_string(g.order()));
  }
  require_masks(g, "auxiliary digraph");
  if (!is_connected(g)) throw GraphError("auxiliary digraph needs a connected graph");

  AuxDigraph h{g, diametral_path(g), options.relaxed, {}, {}, {}, {}, {}, {}};
  const int n = g.order();
  const int diam = h.path.length();
  if (options.relaxed) {
    if (n < 2) throw RegimeError("auxiliary digraph needs at least 2 vertices");
  } else if (diam < 2 || diam > n - 2) {
    throw RegimeError("diameter " + std::to_string(diam) + " outside [2, " + std::to_string(n - 2) +
                      "]; complete graphs and paths are handled separately");
  }
  h.path_distance = distances_to_path(g, h.path);

  h.nodes = connected_sets(g);
  std::sort(h.nodes.begin(), h.nodes.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  h.index.reserve(h.nodes.size());
  for (std::size_t i = 0; i < h.nodes.size(); ++i) h.index.emplace(h.nodes[i].bits(), static_cast<int>(i));

  h.red_succ.assign(h.nodes.size(), kNoNode);
  h.blue_succ.assign(h.nodes.size(), kNoNode);
  h.chosen_x.assign(h.nodes.size(), kNoVertex);
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    const VertexSet s = h.nodes[i];
    const int distance = h.distance_to_path(s);
    if (distance >= 2) {
      const VertexSet admissible = far_rule_admissible(h, s, distance);
      const int x = options.select ? options.select(s, admissible) : admissible.lowest();
      if (x < 0 || x >= n || !admissible.contains(x)) {
        throw std::logic_error("step selector returned an inadmissible vertex");
      }
      h.chosen_x[i] = x;
      h.red_succ[i] = h.blue_succ[i] = h.find(s.with(x));
      continue;
    }
    for (Color c : {Color::red, Color::blue}) {
      const int v = near_rule_vertex(h, s, c);
      if (v != kNoVertex) h.successor(static_cast<int>(i), c) = h.find(s.with(v));
    }
  }
  return h;
}

StructureReport verify_structure(const AuxDigraph& h) {
  StructureReport report;
  auto fail = [&](std::string rule, VertexSet s, std::string detail) {
    report.failures.push_back({std::move(rule), s, std::move(detail)});
  };
  const std::size_t count = h.size();
  const auto& p = h.path.vertices;

  // Ground truth from the enumeration route, independent of the digraph.
  const ConnStats global = stats(h.graph);
  report.connected_sets = global.count;
  report.containing_start = local_stats(h.graph, p.front()).count;
  report.containing_end = local_stats(h.graph, p.back()).count;
  if (global.count != count) {
    fail("node-count", VertexSet{}, "digraph has " + std::to_string(count) + " nodes, N(G) = " + global.count.str());
  }

  for (Color c : {Color::red, Color::blue}) {
    const char* name = to_string(c);
    const int terminal = c == Color::red ? p.front() : p.back();
    std::vector<int> in_degree(count, 0);

    for (std::size_t i = 0; i < count; ++i) {
      const VertexSet s = h.nodes[i];
      const int next = h.successor(static_cast<int>(i), c);
      const bool ended = s.contains(terminal);
      if (ended != (next == kNoNode)) {
        fail(std::string(name) + "-out-degree", s,
             ended ? "set containing the terminal has a successor" : "set lacks a successor");
      }
      if (next == kNoNode) continue;
      if (next < 0 || static_cast<std::size_t>(next) >= count) {
        fail(std::string(name) + "-successor", s, "successor index out of range");
        continue;
      }
      const VertexSet t = h.nodes[next];
      if (!s.subset_of(t) || t.size() != s.size() + 1) {
        fail(std::string(name) + "-successor", s, "successor does not add exactly one vertex");
        continue;
      }
      ++in_degree[next];
      const int added = (t - s).lowest();
      const int distance = h.distance_to_path(s);
      if (distance >= 2) {
        const int x = h.chosen_x[i];
        if (x == kNoVertex || !far_rule_admissible(h, s, distance).contains(x)) {
          fail("far-rule", s, "recorded x is not adjacent and one step closer to the path");
        } else if (added != x) {
          fail("far-rule", s, std::string(name) + " successor adds " + std::to_string(added) +
                                  " instead of x = " + std::to_string(x));
        }
      } else {
        const int expected = near_rule_vertex(h, s, c);
        if (added != expected) {
          fail(std::string("near-rule-") + name, s,
               "adds " + std::to_string(added) + ", rule picks " + std::to_string(expected));
        }
      }
    }

    // Chains: every node on exactly one, each ending at a terminal set.
    std::vector<int> covered(count, 0);
    std::size_t chains = 0;
    BigInt length_sum = 0;
    for (std::size_t i = 0; i < count; ++i) {
      if (in_degree[i] > 1) fail(std::string(name) + "-in-degree", h.nodes[i], std::to_string(in_degree[i]) + " incoming");
      if (in_degree[i] != 0) continue;
      ++chains;
      int node = static_cast<int>(i);
      int length = 0;
      for (;;) {
        ++covered[node];
        const int next = h.successor(node, c);
        if (next < 0 || static_cast<std::size_t>(next) >= count || length > h.graph.order()) break;
        node = next;
        ++length;
      }
      length_sum += length;
      if (!h.nodes[node].contains(terminal)) {
        fail(std::string(name) + "-chain-end", h.nodes[i], "chain ends at " + format_set(h.nodes[node]));
      }
    }
    for (std::size_t i = 0; i < count; ++i) {
      if (covered[i] != 1) {
        fail(std::string(name) + "-forest-cover", h.nodes[i], "on " + std::to_string(covered[i]) + " chains");
      }
    }

    const BigInt& terminal_count = c == Color::red ? report.containing_start : report.containing_end;
    if (terminal_count != chains) {
      fail(std::string(name) + "-chain-count", VertexSet{},
           std::to_string(chains) + " chains, expected " + terminal_count.str());
    }
    if (length_sum != global.count - terminal_count) {
      fail(std::string(name) + "-length-sum", VertexSet{},
           "lengths sum to " + length_sum.str() + ", expected " + BigInt(global.count - terminal_count).str());
    }
    const Rational mean = chains == 0 ? Rational(0) : ratio(length_sum, BigInt(chains));
    if (mean != ratio(global.count, terminal_count) - 1) {
      fail(std::string(name) + "-mean-length", VertexSet{}, "mean chain length " + format_fraction(mean));
    }
    if (c == Color::red) {
      report.red_paths = chains;
      report.red_length_sum = length_sum;
      report.mean_red_length = mean;
    } else {
      report.blue_paths = chains;
      report.blue_length_sum = length_sum;
      report.mean_blue_length = mean;
    }
  }
  return report;
}

namespace {

std::string vertex_name(int v, std::span<const std::string> labels) {
  return static_cast<std::size_t>(v) < labels.size() ? labels[v] : std::to_string(v);
}

}  // namespace

std::string format_set(VertexSet s, std::span<const std::string> labels) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ",";
    first = false;
    out += vertex_name(v, labels);
  }
  return out + "}";
}

std::string dump_component(const AuxDigraph& h, VertexSet member, std::span<const std::string> labels) {
  const int root = h.find(member);
  if (root == kNoNode) throw std::invalid_argument(format_set(member, labels) + " is not a connected set");

  std::vector<std::vector<int>> touching(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (Color c : {Color::red, Color::blue}) {
      const int next = h.successor(static_cast<int>(i), c);
      if (next == kNoNode) continue;
      touching[i].push_back(next);
      touching[next].push_back(static_cast<int>(i));
    }
  }
  std::vector<bool> in_component(h.size(), false);
  std::vector<int> stack{root};
  in_component[root] = true;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : touching[u]) {
      if (!in_component[w]) {
        in_component[w] = true;
        stack.push_back(w);
      }
    }
  }

  std::ostringstream lines;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (!in_component[i]) continue;
    ++nodes;
    for (Color c : {Color::red, Color::blue}) {
      const int next = h.successor(static_cast<int>(i), c);
      if (next == kNoNode) continue;
      ++edges;
      lines << format_set(h.nodes[i], labels) << " -> " << format_set(h.nodes[next], labels) << ' '
            << (c == Color::red ? 'R' : 'B');
      if (h.chosen_x[i] != kNoVertex) lines << " x=" << vertex_name(h.chosen_x[i], labels);
      lines << '\n';
    }
  }
  std::ostringstream out;
  out << "component " << format_set(member, labels) << ": " << nodes << " nodes, " << edges << " edges\n"
      << lines.str();
  return out.str();
}

HeavyVertexWitness heavy_vertex_witness(const Graph& g) {
  const int n = g.order();
  if (n < 3) throw std::invalid_argument("heavy vertex witness needs at least 3 vertices");
  if (!is_connected(g)) throw GraphError("heavy vertex witness needs a connected graph");

  HeavyVertexWitness w;
  w.count = stats(g).count;
  w.bound = Rational(2, n + 1);
  const PathWitness path = diametral_path(g);
  const BigInt at_start = local_stats(g, path.front()).count;
  const BigInt at_end = local_stats(g, path.back()).count;
  w.start_satisfies = ratio(at_start, w.count) >= w.bound;
  w.end_satisfies = ratio(at_end, w.count) >= w.bound;

  if (path.length() == 1) {
    w.route = HeavyVertexWitness::Route::complete;
    w.vertex = 0;
    w.count_at_vertex = local_stats(g, 0).count;
  } else if (path.length() == n - 1) {
    w.route = HeavyVertexWitness::Route::path;
    w.vertex = path.front();
    w.count_at_vertex = at_start;
  } else {
    w.route = HeavyVertexWitness::Route::diametral;
    const bool take_start = at_start >= at_end;
    w.vertex = take_start ? path.front() : path.back();
    w.count_at_vertex = take_start ? at_start : at_end;
  }
  w.ratio = ratio(w.count_at_vertex, w.count);
  w.cutvertex = is_cutvertex(g, w.vertex);
  w.equality = w.ratio == w.bound;
  w.strict = w.ratio > w.bound;
  w.holds = !w.cutvertex && w.ratio >= w.bound;
  return w;
}

}  // namespace avgconn
