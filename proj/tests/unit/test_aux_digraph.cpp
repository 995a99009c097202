#include "corpus.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace avgconn;
using testing_support::connected;
using testing_support::worked_example;
using testing_support::worked_example_labels;

namespace {

bool in_regime(const Graph& g) {
  const int diam = diametral_path(g).length();
  return diam >= 2 && diam <= g.order() - 2;
}

bool all_checks_pass(const AuxDigraph& h) {
  if (!verify_structure(h).ok()) return false;
  return verify_claims(h, classify_tops(h)).ok();
}

const Top* find_top(const TopCensus& census, VertexSet s, Color c) {
  for (const Top& t : census.tops) {
    if (t.set == s && t.color == c) return &t;
  }
  return nullptr;
}

constexpr int v0 = 0, v1 = 1, v2 = 2, a = 3, b = 4;

}  // namespace

TEST_CASE("worked example component dump") {
  const AuxDigraph h = build_aux_digraph(worked_example());
  const std::string dump = dump_component(h, VertexSet::of({a}), worked_example_labels());
  CHECK(dump == testing_support::read_data("fig1_component.txt"));
  CHECK(h.chosen_x[h.find(VertexSet::of({a}))] == b);
  CHECK(h.path.vertices == std::vector<int>{v0, v1, v2});
}

TEST_CASE("worked example classification and claims") {
  const AuxDigraph h = build_aux_digraph(worked_example());
  const TopCensus census = classify_tops(h);
  const VertexSet abv0 = VertexSet::of({a, b, v0});
  CHECK(find_top(census, abv0, Color::blue) != nullptr);
  CHECK(find_top(census, abv0, Color::red) == nullptr);
  CHECK(verify_structure(h).ok());
  const ClaimReport claims = verify_claims(h, census);
  CHECK(claims.ok());
  CHECK(claims.mean_all < Rational(5, 2));
  CHECK(claims.bound == Rational(5, 2));
}

TEST_CASE("regime boundaries") {
  CHECK_THROWS_AS(build_aux_digraph(make_path(4)), RegimeError);
  CHECK_THROWS_AS(build_aux_digraph(make_complete(4)), RegimeError);
  CHECK_THROWS_AS(build_aux_digraph(Graph(4, {{0, 1}})), GraphError);
  AuxOptions small;
  small.max_order = 5;
  CHECK_THROWS_AS(build_aux_digraph(make_cycle(6), small), RegimeError);
  AuxOptions relaxed;
  relaxed.relaxed = true;
  CHECK_THROWS_AS(build_aux_digraph(make_path(1), relaxed), RegimeError);
  const AuxDigraph p4 = build_aux_digraph(make_path(4), relaxed);
  CHECK(verify_structure(p4).ok());
  CHECK_THROWS_AS(verify_claims(p4, classify_tops(p4)), RegimeError);
}

TEST_CASE("relaxed build on the three-vertex path") {
  AuxOptions relaxed;
  relaxed.relaxed = true;
  const AuxDigraph h = build_aux_digraph(make_path(3), relaxed);
  const StructureReport s = verify_structure(h);
  CHECK(s.ok());
  CHECK(s.red_paths == 3);
  CHECK(s.containing_start == 3);
  CHECK(s.mean_red_length == 1);
  // Chains {0}; {1} -> {0,1}; {2} -> {1,2} -> {0,1,2}.
  CHECK(h.red_succ[h.find(VertexSet::of({0}))] == kNoNode);
  CHECK(h.red_succ[h.find(VertexSet::of({1}))] == h.find(VertexSet::of({0, 1})));
  CHECK(h.red_succ[h.find(VertexSet::of({2}))] == h.find(VertexSet::of({1, 2})));
  CHECK(h.red_succ[h.find(VertexSet::of({1, 2}))] == h.find(VertexSet::of({0, 1, 2})));
  const TopCensus census = classify_tops(h);
  CHECK(census.mu.low.count == 6);
  CHECK(census.mu.low.mean() == 1);
}

TEST_CASE("star with three leaves") {
  // Centre 0, leaves 1..3; the diametral path is 1 0 2 and leaf 3 hangs off it.
  const AuxDigraph h = build_aux_digraph(make_star(3));
  CHECK(h.path.vertices == std::vector<int>{1, 0, 2});
  const int leaf = h.find(VertexSet::of({3}));
  CHECK(h.nodes[h.red_succ[leaf]] == VertexSet::of({0, 3}));
  CHECK(h.nodes[h.blue_succ[leaf]] == VertexSet::of({0, 3}));
  CHECK(h.nodes[h.red_succ[h.find(VertexSet::of({0, 3}))]] == VertexSet::of({0, 1, 3}));
  CHECK(all_checks_pass(h));
}

TEST_CASE("digraph matches an independent implementation of the rules, order <= 6") {
  for (int n = 4; n <= 6; ++n) {
    for (const Graph& g : connected(n)) {
      if (!in_regime(g)) continue;
      const AuxDigraph h = build_aux_digraph(g);
      const oracle::AuxRules rules = oracle::aux_rules(g, h.path.vertices);
      CHECK(h.size() == oracle::connected_subsets(g).size());
      for (std::size_t i = 0; i < h.size(); ++i) {
        const std::uint64_t s = h.nodes[i].bits();
        const auto expect = [&](const std::map<std::uint64_t, std::uint64_t>& m, int succ) {
          const auto it = m.find(s);
          if (it == m.end()) return succ == kNoNode;
          return succ != kNoNode && h.nodes[succ].bits() == it->second;
        };
        CHECK(expect(rules.red, h.red_succ[i]));
        CHECK(expect(rules.blue, h.blue_succ[i]));
        const auto x = rules.chosen_x.find(s);
        CHECK(h.chosen_x[i] == (x == rules.chosen_x.end() ? kNoVertex : x->second));
      }
    }
  }
}

TEST_CASE("builds are deterministic") {
  for (const Graph& g : connected(6)) {
    if (!in_regime(g)) continue;
    CHECK(build_aux_digraph(g) == build_aux_digraph(g));
  }
}

TEST_CASE("claims hold for other admissible choices of x") {
  AuxOptions highest;
  highest.select = [](VertexSet, VertexSet admissible) { return admissible.highest(); };
  AuxOptions alternating;
  alternating.select = [](VertexSet set, VertexSet admissible) {
    std::vector<int> members(admissible.begin(), admissible.end());
    return members[static_cast<std::size_t>(set.bits() % members.size())];
  };
  std::size_t checked = 0;
  for (int n = 4; n <= 6; ++n) {
    for (const Graph& g : connected(n)) {
      if (!in_regime(g)) continue;
      CHECK(all_checks_pass(build_aux_digraph(g, highest)));
      CHECK(all_checks_pass(build_aux_digraph(g, alternating)));
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("a selector returning an inadmissible vertex is a programming error") {
  AuxOptions bad;
  bad.select = [](VertexSet, VertexSet) { return 63; };
  // Graph with a vertex at distance 2 from its diametral path.
  const Graph g(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {2, 5}, {0, 5}, {2, 3}});
  const AuxDigraph h = build_aux_digraph(g);
  bool has_far = false;
  for (std::size_t i = 0; i < h.size(); ++i) has_far = has_far || h.chosen_x[i] != kNoVertex;
  if (has_far) {
    CHECK_THROWS_AS(build_aux_digraph(g, bad), std::logic_error);
  }
}

TEST_CASE("mutated digraphs are rejected") {
  std::size_t missing = 0, colour = 0, wrong_x = 0;
  for (int n = 4; n <= 6; ++n) {
    for (const Graph& g : connected(n)) {
      if (!in_regime(g)) continue;
      const AuxDigraph h = build_aux_digraph(g);

      for (std::size_t i = 0; i < h.size(); ++i) {
        if (h.red_succ[i] == kNoNode) continue;
        AuxDigraph m = h;
        m.red_succ[i] = kNoNode;
        CHECK_FALSE(all_checks_pass(m));
        // The freed successor becomes a red top, contradicting the characterization.
        const TopCensus census = classify_tops(m);
        const ClaimReport claims = verify_claims(m, census);
        const int target = h.red_succ[i];
        if (h.nodes[target].intersects(h.path.as_set())) {
          CHECK(std::any_of(claims.failures.begin(), claims.failures.end(),
                            [](const CheckFailure& f) { return f.rule == "top-meeting-path-red"; }));
        }
        ++missing;
        break;
      }

      for (std::size_t i = 0; i < h.size(); ++i) {
        if (h.red_succ[i] == kNoNode || h.blue_succ[i] == kNoNode || h.red_succ[i] == h.blue_succ[i]) continue;
        AuxDigraph m = h;
        std::swap(m.red_succ[i], m.blue_succ[i]);
        CHECK_FALSE(all_checks_pass(m));
        ++colour;
        break;
      }

      for (std::size_t i = 0; i < h.size(); ++i) {
        if (h.chosen_x[i] == kNoVertex) continue;
        const VertexSet s = h.nodes[i];
        const int d = h.distance_to_path(s);
        for (int y = 0; y < g.order(); ++y) {
          if (s.contains(y) || !(g.neighbor_mask(y).intersects(s)) || h.path_distance[y] == d - 1) continue;
          AuxDigraph m = h;
          const int grown = h.find(s.with(y));
          m.red_succ[i] = m.blue_succ[i] = grown;
          m.chosen_x[i] = y;
          CHECK_FALSE(all_checks_pass(m));
          ++wrong_x;
          break;
        }
      }
    }
  }
  CHECK(missing > 0);
  CHECK(colour > 0);
  CHECK(wrong_x > 0);
}

TEST_CASE("top census bookkeeping on every graph in regime, order <= 6") {
  for (int n = 4; n <= 6; ++n) {
    for (const Graph& g : connected(n)) {
      if (!in_regime(g)) continue;
      const AuxDigraph h = build_aux_digraph(g);
      const TopCensus census = classify_tops(h);
      const int ell = h.path.length();
      CHECK(census.mu.low.count == static_cast<std::size_t>(2 * (ell + 1)));
      CHECK(census.mu.low.mean() == Rational(ell, 2));
      CHECK(census.mu.high.count >= static_cast<std::size_t>(2 * (n - ell - 1)));
      CHECK(census.mu.normal.count > 0);
      CHECK(census.mu.all.mean() < Rational(n - 1, 2));
      for (const Top& t : census.tops) {
        if (t.kind == TopKind::normal) CHECK_FALSE(t.residue.empty());
        if (t.kind != TopKind::low) CHECK(t.first_touch <= t.last_touch);
      }
    }
  }
}

TEST_CASE("heavy vertex examples") {
  const HeavyVertexWitness p3 = heavy_vertex_witness(make_path(3));
  CHECK(p3.route == HeavyVertexWitness::Route::path);
  CHECK(p3.count_at_vertex == 3);
  CHECK(p3.ratio == Rational(1, 2));
  CHECK(p3.equality);
  CHECK_FALSE(p3.strict);
  CHECK((p3.vertex == 0 || p3.vertex == 2));

  const HeavyVertexWitness k3 = heavy_vertex_witness(make_complete(3));
  CHECK(k3.route == HeavyVertexWitness::Route::complete);
  CHECK(k3.vertex == 0);
  CHECK(k3.count_at_vertex == 4);
  CHECK(k3.strict);

  const HeavyVertexWitness fig = heavy_vertex_witness(worked_example());
  CHECK((fig.vertex == v0 || fig.vertex == v2));
  CHECK(fig.strict);
  CHECK_FALSE(fig.cutvertex);
  CHECK(fig.holds);

  CHECK_THROWS_AS(heavy_vertex_witness(make_path(2)), std::invalid_argument);
  CHECK_THROWS_AS(heavy_vertex_witness(Graph(3, {{0, 1}})), GraphError);
}

TEST_CASE("set formatting") {
  CHECK(format_set(VertexSet::of({0, 3, 4})) == "{0,3,4}");
  CHECK(format_set(VertexSet::of({0, 3, 4}), worked_example_labels()) == "{v0,a,b}");
  CHECK(format_set(VertexSet{}) == "{}");
}
