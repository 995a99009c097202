#include "corpus.hpp"

#include <doctest.h>

#include <algorithm>
#include <sstream>

using namespace avgconn;
using testing_support::connected;

namespace {

std::string render(const ScanReport& r) {
  std::ostringstream out;
  write_csv(out, r);
  return out.str() + to_json(r).dump();
}

}  // namespace

TEST_CASE("global bound scan examples") {
  const ScanReport four = scan_theorem(connected(4), 4);
  CHECK(four.passed());
  CHECK(four.graphs_checked == 6);
  CHECK(*four.min_average == 2);
  CHECK(four.minimizers == std::vector<std::string>{to_graph6(canonical_graph(make_path(4)))});
  const auto star = std::find_if(four.rows.begin(), four.rows.end(),
                                 [](const GraphRow& r) { return r.graph6 == to_graph6(canonical_graph(make_star(3))); });
  REQUIRE(star != four.rows.end());
  CHECK(star->average == Rational(23, 11));

  const ScanReport six = scan_theorem(connected(6), 6);
  CHECK(six.passed());
  CHECK(six.graphs_checked == 112);
  CHECK(*six.min_average == Rational(8, 3));
  CHECK(six.minimizers.size() == 1);

  const ScanReport one = scan_theorem(connected(1), 1);
  CHECK(one.passed());
  CHECK(*one.min_average == 1);
}

TEST_CASE("rejected inputs are recorded") {
  const std::vector<Graph> mixed{make_path(4), Graph(4, {{0, 1}}), make_path(3)};
  const ScanReport r = scan_theorem(mixed, 4);
  CHECK(r.graphs_checked == 1);
  CHECK(r.violations.size() == 2);
  CHECK(r.counters.at("rejected") == 2);
  CHECK_FALSE(r.passed());
}

TEST_CASE("lemma scan examples") {
  const ScanReport five = scan_lemmas(connected(5), 5);
  CHECK(five.passed());
  CHECK(five.graphs_checked == 21);
  CHECK(five.counters.at("aux_checked") == 19);

  const ScanReport three = scan_lemmas(connected(3), 3);
  CHECK(three.passed());
  for (const GraphRow& row : three.rows) {
    const Graph g = parse_graph(row.graph6, GraphFormat::graph6);
    REQUIRE(row.heavy_ratio);
    if (is_path(g)) CHECK(*row.heavy_ratio == Rational(1, 2));   // equality
    else CHECK(*row.heavy_ratio > Rational(1, 2));               // strict
  }
}

TEST_CASE("local-bound equality census on order 6 matches the spider family") {
  const ScanReport six = scan_lemmas(connected(6), 6);
  CHECK(six.passed());
  CHECK(six.counters.count("local_equalities_other") == 0);
  CHECK(six.counters.at("local_equalities_spider") > 0);
}

TEST_CASE("fault injection surfaces as violations") {
  ScanOptions options;
  options.inject_fault = true;
  const ScanReport r = scan_lemmas(connected(5), 5, options);
  CHECK_FALSE(r.passed());
  CHECK(std::any_of(r.violations.begin(), r.violations.end(),
                    [](const Violation& v) { return v.check.starts_with("aux-claims:top-meeting-path"); }));
}

TEST_CASE("conjecture scan examples") {
  const ScanReport k4 = scan_conjectures(std::vector<Graph>{make_complete(4)}, 4);
  CHECK(k4.passed());
  CHECK(k4.rows[0].average == Rational(32, 15));
  CHECK(k4.counters.at("vertex_transitive_cubic") == 1);
  const auto vt = std::find_if(k4.findings.begin(), k4.findings.end(),
                               [](const Finding& f) { return f.kind == "vertex-transitive-cubic"; });
  REQUIRE(vt != k4.findings.end());
  CHECK(*vt->value == Rational(8, 15));
  const auto gap = std::find_if(k4.findings.begin(), k4.findings.end(),
                                [](const Finding& f) { return f.kind == "min-degree-3-min-gap"; });
  REQUIRE(gap != k4.findings.end());
  CHECK(*gap->value == Rational(32, 15) - 2);

  const ScanReport k3 = scan_conjectures(std::vector<Graph>{make_complete(3)}, 3);
  CHECK(k3.rows[0].average == Rational(12, 7));
  CHECK(k3.rows[0].average == complete_graph_average(3));
  CHECK(k3.counters.at("complete") == 1);
}

TEST_CASE("complete graph closed form") {
  CHECK(complete_graph_average(1) == 1);
  CHECK(complete_graph_average(4) == Rational(32, 15));
  CHECK(cubic_ratio_ceiling() == Rational(95831, 100000));
}

TEST_CASE("reports do not depend on worker count or input order") {
  std::vector<Graph> graphs = connected(6);
  ScanOptions one;
  ScanOptions four;
  four.jobs = 4;
  const std::string base = render(scan_lemmas(graphs, 6, one));
  CHECK(render(scan_lemmas(graphs, 6, four)) == base);
  std::reverse(graphs.begin(), graphs.end());
  CHECK(render(scan_lemmas(graphs, 6, four)) == base);
  std::rotate(graphs.begin(), graphs.begin() + 37, graphs.end());
  CHECK(render(scan_lemmas(graphs, 6, one)) == base);
}

TEST_CASE("report serialization") {
  const ScanReport r = scan_theorem(connected(3), 3);
  std::ostringstream csv;
  write_csv(csv, r);
  std::istringstream lines(csv.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header == "graph6,n,N,total,A_num,A_den,lemma2_min_vertex_avg,lemma3_witness,lemma3_ratio_num,lemma3_ratio_den");
  std::string first;
  std::getline(lines, first);
  CHECK(std::count(first.begin(), first.end(), ',') == 9);

  const nlohmann::json j = to_json(r);
  CHECK(j["n"] == 3);
  CHECK(j["graphs_checked"] == 2);
  CHECK(j["passed"] == true);
  CHECK(j["min_average"]["num"] == "5");
  CHECK(j["min_average"]["den"] == "3");
  CHECK(j["rows"].size() == 2);
  CHECK(j["violations"].empty());
}

TEST_CASE("parallel_for visits every index once and propagates errors") {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), 3, [&](std::size_t i) { ++hits[i]; });
  CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
  CHECK_THROWS_AS(parallel_for(10, 2, [](std::size_t i) { if (i == 7) throw std::runtime_error("boom"); }),
                  std::runtime_error);
}
