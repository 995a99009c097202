#include "corpus.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <sstream>

using namespace avgconn;
using testing_support::connected;

TEST_CASE("connected class counts up to order 7") {
  const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) CHECK(connected(n).size() == expected[n - 1]);
  CHECK(connected(3).size() == 2);
  for (const Graph& g : connected(3)) CHECK((g == canonical_graph(make_path(3)) || g == make_complete(3)));
}

TEST_CASE("class counts of all graphs up to order 6") {
  const std::vector<std::size_t> expected{1, 2, 4, 11, 34, 156};
  for (int n = 1; n <= 6; ++n) CHECK(generate_graphs(n).size() == expected[n - 1]);
}

TEST_CASE("generation matches brute force over labeled graphs, order <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (bool connected_only : {true, false}) {
      const std::set<std::uint64_t> expected = oracle::labeled_classes(n, connected_only);
      const std::vector<Graph> generated = connected_only ? connected(n) : generate_graphs(n);
      std::set<std::uint64_t> keys;
      for (const Graph& g : generated) {
        keys.insert(canonical_form(g).key);
        CHECK((is_connected(g) || !connected_only));
      }
      CHECK(keys.size() == generated.size());
      CHECK(keys == expected);
    }
  }
}

TEST_CASE("orbit-stabilizer count of labeled connected graphs on 7 vertices") {
  BigInt labeled = 0;
  for (const Graph& g : connected(7)) {
    const std::uint64_t aut = oracle::brute_automorphisms(g);
    CHECK(automorphism_count(g) == aut);
    labeled += BigInt(5040) / aut;
  }
  CHECK(labeled == 1866256);
}

TEST_CASE("canonical form equals the brute-force minimum") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : connected(n)) {
      const CanonicalForm form = canonical_form(g);
      CHECK(form.key == oracle::brute_canonical_key(g));
      CHECK(canonical_graph(g) == g);  // generated graphs are stored canonically
    }
  }
  // Relabeling does not change the key.
  const Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 4}});
  const Graph h(5, {{4, 3}, {3, 2}, {2, 1}, {1, 0}, {3, 0}});
  CHECK(canonical_form(g).key == canonical_form(h).key);
  CHECK(canonical_graph(g) == canonical_graph(h));
  CHECK_THROWS_AS(canonical_form(make_path(12)), CapacityError);
}

TEST_CASE("free tree counts up to order 10") {
  const std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (int n = 1; n <= 10; ++n) {
    const auto trees = generate_free_trees(n);
    CHECK(trees.size() == expected[n - 1]);
    for (const Graph& t : trees) CHECK(is_tree(t));
  }
}

TEST_CASE("vertex transitivity") {
  CHECK(is_vertex_transitive(make_complete(4)));
  CHECK(is_vertex_transitive(make_cycle(7)));
  CHECK_FALSE(is_vertex_transitive(make_path(3)));
  CHECK_FALSE(is_vertex_transitive(make_wheel(5)));
  // Triangular prism.
  CHECK(is_vertex_transitive(Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}})));
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : connected(n)) {
      const auto adj = oracle::adjacency_matrix(g);
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::set<int> orbit;
      do {
        bool automorphism = true;
        for (int i = 0; i < n && automorphism; ++i)
          for (int j = i + 1; j < n && automorphism; ++j) automorphism = adj[i][j] == adj[perm[i]][perm[j]];
        if (automorphism) orbit.insert(perm[0]);
      } while (std::next_permutation(perm.begin(), perm.end()));
      CHECK(is_vertex_transitive(g) == (static_cast<int>(orbit.size()) == n));
    }
  }
}

TEST_CASE("capacity errors point at file input") {
  try {
    generate_connected_graphs(8);
    FAIL("expected a capacity error");
  } catch (const CapacityError& e) {
    CHECK(std::string(e.what()).find("--in") != std::string::npos);
  }
  CHECK_THROWS_AS(generate_connected_graphs(0), std::invalid_argument);
  CHECK_THROWS_AS(generate_free_trees(12), CapacityError);
}

TEST_CASE("extension by one vertex reaches order 8") {
  // Connected graphs of order 8 number 11117; those with minimum degree 3, 2589.
  const std::vector<Graph> eight = extend_by_vertex(connected(7), true);
  CHECK(eight.size() == 11117);
  std::size_t min_degree_3 = 0;
  for (const Graph& g : eight) min_degree_3 += g.min_degree() >= 3;
  CHECK(min_degree_3 == 2589);
}

TEST_CASE("graph6 corpus reading") {
  std::istringstream ok("Bg\n\nBw\r\n");
  const auto graphs = read_graph6_corpus(ok);
  REQUIRE(graphs.size() == 2);
  CHECK(graphs[1] == make_complete(3));

  std::istringstream bad("Bg\nB~\n");
  try {
    read_graph6_corpus(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).starts_with("line 2:"));
    CHECK(e.offset() == 4);
  }
}

TEST_CASE("stored corpus of minimum-degree-3 graphs on 8 vertices") {
  std::istringstream in(testing_support::read_data("mindeg3_n8.g6"));
  const auto graphs = read_graph6_corpus(in);
  CHECK(graphs.size() == 2589);
  std::set<std::uint64_t> keys;
  for (const Graph& g : graphs) {
    CHECK(g.order() == 8);
    CHECK(g.min_degree() >= 3);
    CHECK(is_connected(g));
    keys.insert(canonical_form(g).key);
  }
  CHECK(keys.size() == graphs.size());
}
