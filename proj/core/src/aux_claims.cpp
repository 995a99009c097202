#include "avgconn/aux_digraph.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <utility>

namespace avgconn {

Rational LengthTally::mean() const {
  if (count == 0) return Rational(0);
  return Rational(length_sum, static_cast<long long>(count));
}

namespace {

constexpr Color kColors[] = {Color::red, Color::blue};

int color_slot(Color c) { return c == Color::red ? 0 : 1; }

// Least and greatest path index with a neighbour in x; (-1, -1) if none.
std::pair<int, int> touch_range(const AuxDigraph& h, VertexSet x) {
  VertexSet around;
  for (int v : x) around |= h.graph.neighbor_mask(v);
  int first = -1;
  int last = -1;
  const auto& p = h.path.vertices;
  for (int k = 0; k < static_cast<int>(p.size()); ++k) {
    if (around.contains(p[k])) {
      if (first < 0) first = k;
      last = k;
    }
  }
  return {first, last};
}

// Least (or greatest) path index of a vertex in s.
int extreme_index(const AuxDigraph& h, VertexSet s, bool greatest) {
  int found = -1;
  for (int k = 0; k < static_cast<int>(h.path.vertices.size()); ++k) {
    if (s.contains(h.path.vertices[k])) {
      found = k;
      if (!greatest) break;
    }
  }
  return found;
}

VertexSet path_slice(const AuxDigraph& h, int from, int to) {
  VertexSet out;
  for (int k = std::max(from, 0); k <= to && k < static_cast<int>(h.path.vertices.size()); ++k) {
    out.insert(h.path.vertices[k]);
  }
  return out;
}

// Chain length from every node, per colour. Walks are capped at n steps.
std::vector<int> chain_lengths(const AuxDigraph& h, Color c) {
  const std::size_t count = h.size();
  std::vector<int> length(count, -1);
  std::vector<int> trail;
  for (std::size_t i = 0; i < count; ++i) {
    int node = static_cast<int>(i);
    trail.clear();
    while (node != kNoNode && length[node] < 0 && static_cast<int>(trail.size()) <= h.graph.order()) {
      trail.push_back(node);
      node = h.successor(node, c);
    }
    int base = node == kNoNode ? -1 : std::max(length[node], 0);
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) length[*it] = ++base;
  }
  return length;
}

std::vector<std::array<int, 2>> in_degrees(const AuxDigraph& h) {
  std::vector<std::array<int, 2>> in(h.size(), {0, 0});
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (Color c : kColors) {
      const int next = h.successor(static_cast<int>(i), c);
      if (next != kNoNode) ++in[next][color_slot(c)];
    }
  }
  return in;
}

}  // namespace

TopCensus classify_tops(const AuxDigraph& h) {
  TopCensus census;
  const VertexSet on_path = h.path.as_set();
  const auto in = in_degrees(h);
  const std::vector<int> lengths[2] = {chain_lengths(h, Color::red), chain_lengths(h, Color::blue)};
  std::map<std::pair<std::uint64_t, std::uint64_t>, ResidueGroup> groups;

  for (std::size_t i = 0; i < h.size(); ++i) {
    const VertexSet s = h.nodes[i];
    for (Color c : kColors) {
      if (in[i][color_slot(c)] != 0) continue;
      Top top;
      top.set = s;
      top.color = c;
      top.length = lengths[color_slot(c)][i];
      if (!s.intersects(on_path)) {
        top.kind = TopKind::high;
        int node = static_cast<int>(i);
        for (int steps = 0; node != kNoNode && steps <= h.graph.order(); ++steps) {
          const VertexSet here = h.nodes[node];
          if (here.intersects(on_path)) break;
          if (h.distance_to_path(here) == 1) {
            top.extension = here;
            top.extension_steps = steps;
            std::tie(top.first_touch, top.last_touch) = touch_range(h, here);
            break;
          }
          node = h.successor(node, c);
        }
        census.mu.high.add(top.length);
      } else if (s.subset_of(on_path)) {
        top.kind = TopKind::low;
        census.mu.low.add(top.length);
      } else {
        top.kind = TopKind::normal;
        top.residue = s - on_path;
        std::tie(top.first_touch, top.last_touch) = touch_range(h, top.residue);
        if (top.first_touch >= 0) top.interior = s & path_slice(h, top.first_touch + 1, top.last_touch - 1);
        census.mu.normal.add(top.length);
        auto& group = groups[{top.residue.bits(), top.interior.bits()}];
        group.residue = top.residue;
        group.interior = top.interior;
        group.first_touch = top.first_touch;
        group.last_touch = top.last_touch;
        group.tally.add(top.length);
      }
      census.mu.all.add(top.length);
      (c == Color::red ? census.mu.red : census.mu.blue).add(top.length);
      census.tops.push_back(top);
    }
  }
  census.mu.groups.reserve(groups.size());
  for (auto& [key, group] : groups) census.mu.groups.push_back(group);
  return census;
}

ClaimReport verify_claims(const AuxDigraph& h, const TopCensus& census) {
  const int n = h.graph.order();
  const int ell = h.path.length();
  if (ell < 2 || ell > n - 2) {
    throw RegimeError("claim verification needs 2 <= diam <= n-2, got diameter " + std::to_string(ell));
  }

  ClaimReport report;
  report.bound = Rational(n - 1, 2);
  auto fail = [&](std::string rule, VertexSet s, std::string detail) {
    report.failures.push_back({std::move(rule), s, std::move(detail)});
  };
  auto fraction = [](const Rational& q) { return format_fraction(q); };

  const auto& p = h.path.vertices;
  const VertexSet on_path = h.path.as_set();

  std::vector<std::array<bool, 2>> is_top(h.size(), {false, false});
  for (const Top& t : census.tops) {
    const int node = h.find(t.set);
    if (node == kNoNode) {
      fail("top-is-node", t.set, "top is not a connected set");
      continue;
    }
    is_top[node][color_slot(t.color)] = true;
  }

  // Top characterizations.
  for (std::size_t i = 0; i < h.size(); ++i) {
    const VertexSet s = h.nodes[i];
    if (s.intersects(on_path)) {
      ++report.sets_meeting_path;
      int lo = -1;
      int hi = -1;
      for (int k = 0; k <= ell; ++k) {
        if (s.contains(p[k])) {
          if (lo < 0) lo = k;
          hi = k;
        }
      }
      for (Color c : kColors) {
        const int end = c == Color::red ? lo : hi;
        const VertexSet rest = s.without(p[end]);
        bool predicted = rest.empty() || !induces_connected(h.graph, rest);
        if (!predicted) {
          VertexSet around;
          for (int v : rest) around |= h.graph.neighbor_mask(v);
          const VertexSet beyond = c == Color::red ? path_slice(h, 0, end - 1) : path_slice(h, end + 1, ell);
          predicted = around.intersects(beyond);
        }
        if (predicted != is_top[i][color_slot(c)]) {
          fail(std::string("top-meeting-path-") + to_string(c), s,
               predicted ? "characterized as a top but has an incoming edge" : "is a top but not characterized as one");
        }
      }
    } else {
      ++report.sets_off_path;
      if (is_top[i][0] != is_top[i][1]) fail("top-off-path", s, "red and blue top status differ");
    }
  }

  // Low tops: exactly the path singletons, lengths i and ell - i.
  const Rational half_ell(ell, 2);
  if (census.mu.low.count != static_cast<std::size_t>(2 * (ell + 1))) {
    fail("low-count", VertexSet{}, std::to_string(census.mu.low.count) + " low tops, expected " + std::to_string(2 * (ell + 1)));
  }
  if (census.mu.low.mean() != half_ell) fail("low-mean", VertexSet{}, "mean " + fraction(census.mu.low.mean()));
  for (const Top& t : census.tops) {
    if (t.kind != TopKind::low) continue;
    if (t.set.size() != 1) {
      fail("low-singleton", t.set, "low top is not a singleton");
      continue;
    }
    const int k = h.path.index_of(t.set.lowest());
    const int expected = t.color == Color::red ? k : ell - k;
    if (t.length != expected) fail("low-length", t.set, std::to_string(t.length) + " != " + std::to_string(expected));
  }
  if (census.mu.high.count < static_cast<std::size_t>(2 * (n - ell - 1))) {
    fail("high-count", VertexSet{}, std::to_string(census.mu.high.count) + " high tops, expected at least " +
                                        std::to_string(2 * (n - ell - 1)));
  }
  if (census.mu.normal.count == 0) fail("normal-count", VertexSet{}, "no normal tops");

  // Normal tops: shape of each top and the (residue, interior) group bounds.
  std::map<std::uint64_t, LengthTally> by_residue;
  std::map<std::uint64_t, std::pair<int, int>> residue_touch;
  for (const Top& t : census.tops) {
    if (t.kind != TopKind::normal) continue;
    by_residue[t.residue.bits()].add(t.length);
    residue_touch[t.residue.bits()] = {t.first_touch, t.last_touch};
    if (t.first_touch < 0) {
      fail("residue-adjacent", t.set, "residue has no neighbour on the path");
      continue;
    }
    const int i_x = t.first_touch;
    const int j_x = t.last_touch;
    const VertexSet left = t.set & path_slice(h, 0, i_x);
    const VertexSet right = t.set & path_slice(h, j_x, ell);
    // Either empty or an interval ending at v_{i_x} (resp. starting at v_{j_x}).
    const bool left_ok = left.empty() || left == path_slice(h, extreme_index(h, left, false), i_x);
    const bool right_ok = right.empty() || right == path_slice(h, j_x, extreme_index(h, right, true));
    if (!left_ok || !right_ok || (left.empty() && right.empty() && t.interior.empty())) {
      fail("normal-form", t.set, "not of the form X+Y, R_a, S_b or T_ab");
    }
  }
  for (const ResidueGroup& g : census.mu.groups) {
    ++report.residue_groups;
    const Rational cap = g.first_touch == g.last_touch ? half_ell : Rational(ell + 1, 2);
    if (g.tally.mean() > cap) {
      fail("group-mean", g.residue | g.interior,
           "mean " + fraction(g.tally.mean()) + " exceeds " + fraction(cap));
    }
  }
  for (const auto& [bits, tally] : by_residue) {
    const auto [i_x, j_x] = residue_touch[bits];
    const Rational cap(ell + (i_x < j_x ? 1 : 0), 2);
    if (tally.mean() > cap) {
      fail("residue-mean", VertexSet{bits}, "mean " + fraction(tally.mean()) + " exceeds " + fraction(cap));
    }
  }

  // High tops and their extensions.
  std::map<std::uint64_t, std::vector<const Top*>> by_extension;
  LengthTally high_and_normal = census.mu.normal;
  for (const Top& t : census.tops) {
    if (t.kind != TopKind::high) continue;
    high_and_normal.add(t.length);
    if (t.extension.empty()) {
      fail("high-extension", t.set, std::string(to_string(t.color)) + " chain never reaches distance 1");
      continue;
    }
    by_extension[t.extension.bits()].push_back(&t);
    if (t.extension_steps > n - ell - 2) {
      fail("extension-steps", t.set, std::to_string(t.extension_steps) + " steps to the extension");
    }
    const int cap = t.color == Color::red ? n - ell - 1 + t.first_touch : n - 1 - t.last_touch;
    if (t.length > cap) {
      fail("high-length", t.set, std::string(to_string(t.color)) + " length " + std::to_string(t.length) +
                                     " exceeds " + std::to_string(cap));
    }
  }
  std::size_t adjacent_sets = 0;
  for (const VertexSet& s : h.nodes) {
    if (!s.intersects(on_path) && h.distance_to_path(s) == 1) ++adjacent_sets;
  }
  if (by_extension.size() != adjacent_sets) {
    fail("extension-cover", VertexSet{}, std::to_string(by_extension.size()) + " extensions, " +
                                            std::to_string(adjacent_sets) + " sets adjacent to the path");
  }
  report.extensions = by_extension.size();
  for (const auto& [bits, owners] : by_extension) {
    const VertexSet x{bits};
    if (owners.size() != 2 || owners[0]->set != owners[1]->set || owners[0]->color == owners[1]->color) {
      fail("extension-owners", x, std::to_string(owners.size()) + " high tops share this extension");
    }
    LengthTally combined;
    if (const auto it = by_residue.find(bits); it != by_residue.end()) combined = it->second;
    if (combined.count < 2) fail("extension-normal-count", x, std::to_string(combined.count) + " normal tops");
    for (const Top* t : owners) combined.add(t->length);
    if (combined.mean() > report.bound) {
      fail("extension-mean", x, "mean " + fraction(combined.mean()) + " exceeds " + fraction(report.bound));
    }
  }
  for (const auto& [bits, tally] : by_residue) {
    if (by_extension.count(bits) == 0 && tally.mean() > report.bound) {
      fail("residue-mean-bound", VertexSet{bits}, "mean " + fraction(tally.mean()) + " exceeds " + fraction(report.bound));
    }
  }
  if (high_and_normal.mean() > report.bound) {
    fail("high-normal-mean", VertexSet{}, "mean " + fraction(high_and_normal.mean()));
  }

  // Forest accounting and the two decompositions of the overall mean.
  const auto& mu = census.mu;
  for (Color c : kColors) {
    const LengthTally& tally = c == Color::red ? mu.red : mu.blue;
    if (tally.length_sum + static_cast<long long>(tally.count) != static_cast<long long>(h.size())) {
      fail(std::string(to_string(c)) + "-forest-accounting", VertexSet{},
           "lengths + chains = " + std::to_string(tally.length_sum + static_cast<long long>(tally.count)) +
               ", N(G) = " + std::to_string(h.size()));
    }
  }
  LengthTally direct;
  for (const Top& t : census.tops) direct.add(t.length);
  report.mean_all = direct.mean();
  auto weighted = [](std::initializer_list<const LengthTally*> parts) {
    Rational numerator = 0;
    long long weight = 0;
    for (const LengthTally* part : parts) {
      numerator += Rational(static_cast<long long>(part->count)) * part->mean();
      weight += static_cast<long long>(part->count);
    }
    return weight == 0 ? Rational(0) : numerator / weight;
  };
  if (weighted({&mu.red, &mu.blue}) != report.mean_all) {
    fail("colour-decomposition", VertexSet{}, fraction(weighted({&mu.red, &mu.blue})) + " != " + fraction(report.mean_all));
  }
  if (weighted({&mu.high, &mu.normal, &mu.low}) != report.mean_all) {
    fail("kind-decomposition", VertexSet{},
         fraction(weighted({&mu.high, &mu.normal, &mu.low})) + " != " + fraction(report.mean_all));
  }
  if (!(report.mean_all < report.bound)) {
    fail("all-tops-mean", VertexSet{}, "mean " + fraction(report.mean_all) + " is not below " + fraction(report.bound));
  }
  return report;
}

}  // namespace avgconn
