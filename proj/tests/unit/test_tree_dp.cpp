#include "corpus.hpp"

#include <doctest.h>

using namespace avgconn;

TEST_CASE("tree statistics examples") {
  CHECK(tree_stats(make_path(4)) == ConnStats::from_totals(10, 20));
  CHECK(tree_stats(make_path(4)).average == 2);
  CHECK(tree_stats(make_star(3)) == ConnStats::from_totals(11, 23));
  CHECK(tree_stats(make_path(3)) == ConnStats::from_totals(6, 10));
  CHECK(tree_stats(make_path(1)) == ConnStats::from_totals(1, 1));
  CHECK_THROWS_AS(tree_stats(make_cycle(4)), GraphError);
  CHECK_THROWS_AS(tree_stats(Graph(3, {{0, 1}})), GraphError);
}

TEST_CASE("per-vertex tree statistics examples") {
  const auto p3 = tree_local_stats_all(make_path(3));
  REQUIRE(p3.size() == 3);
  CHECK(p3[0].count == 3);
  CHECK(p3[1].count == 4);
  CHECK(p3[2].count == 3);
  for (const LocalStats& l : p3) CHECK(l.average == 2);
  const auto star = tree_local_stats_all(make_star(3));
  CHECK(star[0].count == 8);
  CHECK(star[0].average == Rational(5, 2));
  for (int leaf = 1; leaf <= 3; ++leaf) {
    CHECK(star[leaf].count == 5);
    CHECK(star[leaf].average == Rational(13, 5));
  }
  CHECK(tree_local_stats_all(make_path(1)) == std::vector<LocalStats>{LocalStats::from_totals(0, 1, 1)});
}

TEST_CASE("path closed form") {
  CHECK(path_closed_form(3) == ConnStats::from_totals(6, 10));
  CHECK(path_closed_form(4) == ConnStats::from_totals(10, 20));
  CHECK(path_closed_form(1) == ConnStats::from_totals(1, 1));
  CHECK_THROWS_AS(path_closed_form(0), std::invalid_argument);
  for (int n = 1; n <= 300; ++n) {
    CHECK(tree_stats(make_path(n)) == path_closed_form(n));
    CHECK(path_closed_form(n).average == Rational(n + 2, 3));
  }
}

TEST_CASE("tree DP agrees with enumeration on every free tree up to order 10") {
  for (int n = 1; n <= 10; ++n) {
    for (const Graph& t : generate_free_trees(n)) {
      CHECK(tree_stats(t) == stats(t));
      CHECK(tree_local_stats_all(t) == local_stats_all(t));
    }
  }
}

TEST_CASE("the path is the unique minimizer among free trees up to order 10") {
  for (int n = 1; n <= 10; ++n) {
    std::optional<Rational> best;
    int minimizers = 0;
    bool path_attains = false;
    for (const Graph& t : generate_free_trees(n)) {
      const Rational a = tree_stats(t).average;
      if (!best || a < *best) {
        best = a;
        minimizers = 0;
        path_attains = false;
      }
      if (a == *best) {
        ++minimizers;
        path_attains = path_attains || is_path(t);
      }
    }
    CHECK(minimizers == 1);
    CHECK(path_attains);
    CHECK(*best == Rational(n + 2, 3));
  }
}

TEST_CASE("random trees of order up to 20 agree with enumeration") {
  // Pruefer-like construction with a fixed linear congruential sequence.
  std::uint64_t state = 12345;
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 11 + trial % 10;
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      edges.push_back({static_cast<int>((state >> 33) % static_cast<std::uint64_t>(v)), v});
    }
    const Graph t(n, edges);
    CHECK(tree_stats(t) == stats(t));
    CHECK(tree_local_stats_all(t) == local_stats_all(t));
  }
}

TEST_CASE("long paths need no recursion") {
  const Graph p = make_path(50000);
  CHECK(tree_stats(p) == path_closed_form(50000));
  const auto locals = tree_local_stats_all(p);
  CHECK(locals.front().count == 50000);
  CHECK(locals[1].count == BigInt(2) * 49999);
}

TEST_CASE("subtree tally algebra") {
  SubtreeTally t = SubtreeTally::single();
  t *= SubtreeTally::single().optional_branch();
  CHECK(t.count == 2);
  CHECK(t.total_order == 3);
  const SubtreeTally u = t * SubtreeTally{1, 0};
  CHECK(u.count == 2);
  CHECK(u.total_order == 3);
}
