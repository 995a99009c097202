#include "avgconn/graph.hpp"

#include <charconv>
#include <set>
#include <utility>

namespace avgconn {

namespace {

constexpr int kGraph6MaxOrder = 62;
constexpr std::string_view kGraph6Header = ">>graph6<<";

std::size_t triangle_bits(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }

Graph parse_graph6(std::string_view input) {
  std::size_t base = 0;
  if (input.starts_with(kGraph6Header)) {
    input.remove_prefix(kGraph6Header.size());
    base = kGraph6Header.size();
  }
  if (input.ends_with('\n')) input.remove_suffix(1);
  if (input.ends_with('\r')) input.remove_suffix(1);
  if (input.empty()) throw ParseError("empty graph6 string", base);

  const auto first = static_cast<unsigned char>(input[0]);
  if (first < 63 || first > 126) throw ParseError("graph6 order byte out of range", base);
  if (first == 126) throw ParseError("graph6 orders above 62 are not supported", base);
  const int n = first - 63;
  if (n < 1) throw ParseError("graph6 order must be at least 1", base);

  const std::size_t bits = triangle_bits(n);
  const std::size_t expected = 1 + (bits + 5) / 6;
  if (input.size() != expected) {
    throw ParseError("graph6 length " + std::to_string(input.size()) + ", expected " +
                         std::to_string(expected) + " for order " + std::to_string(n),
                     base + std::min(input.size(), expected));
  }
  for (std::size_t i = 1; i < input.size(); ++i) {
    const auto c = static_cast<unsigned char>(input[i]);
    if (c < 63 || c > 126) throw ParseError("graph6 data byte out of range", base + i);
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int value = static_cast<unsigned char>(input[1 + k / 6]) - 63;
      if ((value >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  for (; k % 6 != 0; ++k) {
    const int value = static_cast<unsigned char>(input[1 + k / 6]) - 63;
    if ((value >> (5 - k % 6)) & 1) throw ParseError("nonzero graph6 padding bit", base + 1 + k / 6);
  }
  return Graph(n, edges);
}

struct Token {
  std::string_view text;
  std::size_t offset;
};

std::vector<Token> tokenize(std::string_view input) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const auto space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (i < input.size()) {
    while (i < input.size() && space(input[i])) ++i;
    if (i < input.size() && input[i] == '#') {
      while (i < input.size() && input[i] != '\n') ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < input.size() && !space(input[i])) ++i;
    if (i > start) tokens.push_back({input.substr(start, i - start), start});
  }
  return tokens;
}

int to_int(const Token& t) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) {
    throw ParseError("expected an integer, got '" + std::string(t.text) + "'", t.offset);
  }
  return value;
}

Graph parse_edge_list(std::string_view input) {
  const auto tokens = tokenize(input);
  if (tokens.empty()) throw ParseError("empty edge list", 0);
  const int n = to_int(tokens[0]);
  if (n < 1) throw ParseError("vertex count must be at least 1", tokens[0].offset);
  if ((tokens.size() - 1) % 2 != 0) throw ParseError("edge with a single endpoint", tokens.back().offset);

  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 1; i + 1 < tokens.size(); i += 2) {
    const int u = to_int(tokens[i]);
    const int v = to_int(tokens[i + 1]);
    if (u < 0 || u >= n) throw ParseError("vertex " + std::to_string(u) + " out of range", tokens[i].offset);
    if (v < 0 || v >= n) throw ParseError("vertex " + std::to_string(v) + " out of range", tokens[i + 1].offset);
    if (u == v) throw ParseError("loop at vertex " + std::to_string(u), tokens[i].offset);
    if (!seen.insert(std::minmax(u, v)).second) {
      throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v), tokens[i].offset);
    }
    edges.push_back({u, v});
  }
  return Graph(n, edges);
}

}  // namespace

Graph parse_graph(std::string_view input, GraphFormat format) {
  return format == GraphFormat::graph6 ? parse_graph6(input) : parse_edge_list(input);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) throw CapacityError("graph6 output supports at most 62 vertices");
  const std::size_t bits = triangle_bits(n);
  std::string out(1 + (bits + 5) / 6, '\0');
  out[0] = static_cast<char>(n + 63);
  std::vector<int> data(out.size() - 1, 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (g.adjacent(i, j)) data[k / 6] |= 1 << (5 - k % 6);
    }
  }
  for (std::size_t b = 0; b < data.size(); ++b) out[1 + b] = static_cast<char>(data[b] + 63);
  return out;
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

}  // namespace avgconn
