#include "avgconn/generate.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace avgconn {

std::vector<Graph> extend_by_vertex(const std::vector<Graph>& base, bool connected_only) {
  std::map<std::pair<int, std::uint64_t>, Graph> classes;
  for (const Graph& g : base) {
    const int m = g.order();
    const std::vector<Edge> edges = g.edges();
    for (std::uint64_t subset = connected_only ? 1 : 0; subset < (std::uint64_t{1} << m); ++subset) {
      std::vector<Edge> grown = edges;
      for (int v : VertexSet{subset}) grown.push_back({v, m});
      const Graph candidate(m + 1, grown);
      const std::uint64_t key = canonical_form(candidate).key;
      if (!classes.contains({m + 1, key})) classes.emplace(std::pair{m + 1, key}, canonical_graph(candidate));
    }
  }
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [key, g] : classes) out.push_back(std::move(g));
  return out;
}

namespace {

std::vector<Graph> grow(int n, bool connected_only) {
  std::vector<Graph> level{Graph(1, {})};
  for (int order = 2; order <= n; ++order) level = extend_by_vertex(level, connected_only);
  return level;
}

void check_generated_order(int n) {
  if (n < 1) throw std::invalid_argument("graph order must be at least 1");
  if (n > kMaxGeneratedOrder) {
    throw CapacityError("built-in generation stops at order " + std::to_string(kMaxGeneratedOrder) +
                        "; supply larger corpora as graph6 files (--in FILE)");
  }
}

}  // namespace

std::vector<Graph> generate_connected_graphs(int n) {
  check_generated_order(n);
  return grow(n, true);
}

std::vector<Graph> generate_graphs(int n) {
  check_generated_order(n);
  return grow(n, false);
}

std::vector<Graph> generate_free_trees(int n) {
  if (n < 1) throw std::invalid_argument("tree order must be at least 1");
  if (n > kMaxCanonicalOrder) {
    throw CapacityError("free tree generation supports at most " + std::to_string(kMaxCanonicalOrder) + " vertices");
  }
  std::vector<Graph> level{Graph(1, {})};
  for (int order = 2; order <= n; ++order) {
    std::map<std::uint64_t, Graph> classes;
    for (const Graph& t : level) {
      for (int attach = 0; attach < t.order(); ++attach) {
        std::vector<Edge> edges = t.edges();
        edges.push_back({attach, t.order()});
        const Graph candidate(order, edges);
        const std::uint64_t key = canonical_form(candidate).key;
        if (!classes.contains(key)) classes.emplace(key, canonical_graph(candidate));
      }
    }
    level.clear();
    for (auto& [key, t] : classes) level.push_back(std::move(t));
  }
  return level;
}

std::vector<Graph> read_graph6_corpus(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t line_number = 0;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::size_t line_offset = offset;
    offset += line.size() + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      out.push_back(parse_graph(line, GraphFormat::graph6));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_number) + ": " + e.what(), line_offset + e.offset());
    } catch (const GraphError& e) {
      throw ParseError("line " + std::to_string(line_number) + ": " + e.what(), line_offset);
    }
  }
  return out;
}

}  // namespace avgconn
