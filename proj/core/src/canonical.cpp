#include "avgconn/generate.hpp"

#include <algorithm>

namespace avgconn {

namespace {

class CanonicalSearch {
public:
  explicit CanonicalSearch(const Graph& g)
      : g_(g), n_(g.order()), total_bits_(n_ * (n_ - 1) / 2), perm_(static_cast<std::size_t>(n_)) {}

  CanonicalForm run() {
    search(0, 0, 0);
    return {best_, best_perm_};
  }

private:
  // Columns are appended position by position; a partial labeling whose
  // prefix already exceeds the best key cannot lead to a smaller one.
  void search(int pos, std::uint64_t prefix, int bits) {
    if (pos == n_) {
      if (!found_ || prefix < best_) {
        best_ = prefix;
        best_perm_ = perm_;
        found_ = true;
      }
      return;
    }
    for (int w = 0; w < n_; ++w) {
      if ((used_ >> w) & 1U) continue;
      std::uint64_t column = 0;
      for (int i = 0; i < pos; ++i) column = (column << 1) | (g_.adjacent(perm_[i], w) ? 1U : 0U);
      const std::uint64_t extended = (prefix << pos) | column;
      const int extended_bits = bits + pos;
      if (found_ && extended > (best_ >> (total_bits_ - extended_bits))) continue;
      perm_[pos] = w;
      used_ |= std::uint64_t{1} << w;
      search(pos + 1, extended, extended_bits);
      used_ &= ~(std::uint64_t{1} << w);
    }
  }

  const Graph& g_;
  int n_;
  int total_bits_;
  std::vector<int> perm_;
  std::uint64_t used_ = 0;
  std::uint64_t best_ = 0;
  std::vector<int> best_perm_;
  bool found_ = false;
};

// Backtracking over images of 0, 1, ...; calls on_found for each
// automorphism and stops early when it returns false.
template <class OnFound>
bool for_each_automorphism(const Graph& g, std::vector<int>& image, std::uint64_t& taken, int next,
                           OnFound& on_found) {
  const int n = g.order();
  if (next == n) return on_found();
  for (int w = 0; w < n; ++w) {
    if ((taken >> w) & 1U) continue;
    if (g.degree(w) != g.degree(next)) continue;
    bool consistent = true;
    for (int u = 0; u < next && consistent; ++u) consistent = g.adjacent(u, next) == g.adjacent(image[u], w);
    if (!consistent) continue;
    image[next] = w;
    taken |= std::uint64_t{1} << w;
    const bool keep_going = for_each_automorphism(g, image, taken, next + 1, on_found);
    taken &= ~(std::uint64_t{1} << w);
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw CapacityError("canonical form supports at most " + std::to_string(kMaxCanonicalOrder) + " vertices");
  }
  return CanonicalSearch(g).run();
}

Graph canonical_graph(const Graph& g) {
  const CanonicalForm form = canonical_form(g);
  std::vector<Edge> edges;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) {
      if (g.adjacent(form.labeling[i], form.labeling[j])) edges.push_back({i, j});
    }
  }
  return Graph(g.order(), edges);
}

std::uint64_t automorphism_count(const Graph& g) {
  if (g.order() > kMaxMaskOrder) throw CapacityError("automorphism search supports at most 64 vertices");
  std::vector<int> image(static_cast<std::size_t>(g.order()));
  std::uint64_t taken = 0;
  std::uint64_t count = 0;
  auto on_found = [&] {
    ++count;
    return true;
  };
  for_each_automorphism(g, image, taken, 0, on_found);
  return count;
}

bool is_vertex_transitive(const Graph& g) {
  if (g.order() > kMaxMaskOrder) throw CapacityError("automorphism search supports at most 64 vertices");
  const int n = g.order();
  for (int target = 1; target < n; ++target) {
    if (g.degree(target) != g.degree(0)) return false;
    std::vector<int> image(static_cast<std::size_t>(n));
    image[0] = target;
    std::uint64_t taken = std::uint64_t{1} << target;
    bool found = false;
    auto on_found = [&] {
      found = true;
      return false;
    };
    for_each_automorphism(g, image, taken, 1, on_found);
    if (!found) return false;
  }
  return true;
}

}  // namespace avgconn
