#include "avgconn/connected_sets.hpp"

#include <stdexcept>

namespace avgconn {

namespace {

__extension__ typedef unsigned __int128 u128;

BigInt to_big(u128 x) {
  BigInt hi = static_cast<std::uint64_t>(x >> 64);
  BigInt lo = static_cast<std::uint64_t>(x);
  return (hi << 64) | lo;
}

struct Tally {
  u128 count = 0;
  u128 total = 0;
};

// Same branching as detail::extend_connected, but once every remaining
// allowed vertex touches `set`, all 2^r supersets are connected and are
// counted in closed form.
void tally_supersets(const std::uint64_t* rows, std::uint64_t set, std::uint64_t candidates,
                     std::uint64_t excluded, std::uint64_t allowed, Tally& tally) {
  const std::uint64_t rest = allowed & ~set & ~excluded;
  const int size = std::popcount(set);
  if (candidates == rest) {
    const int r = std::popcount(rest);
    const u128 subsets = u128{1} << r;
    tally.count += subsets;
    tally.total += subsets * static_cast<unsigned>(size);
    if (r > 0) tally.total += u128{static_cast<unsigned>(r)} << (r - 1);
    return;
  }
  tally.count += 1;
  tally.total += static_cast<unsigned>(size);
  while (candidates != 0) {
    const int v = std::countr_zero(candidates);
    const std::uint64_t bit = std::uint64_t{1} << v;
    candidates &= ~bit;
    const std::uint64_t grown = set | bit;
    tally_supersets(rows, grown, (candidates | rows[v]) & allowed & ~grown & ~excluded, excluded,
                    allowed, tally);
    excluded |= bit;
  }
}

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw GraphError("connected-set statistics need a connected graph");
}

}  // namespace

ConnStats ConnStats::from_totals(BigInt count, BigInt total_order) {
  Rational average = ratio(total_order, count);
  return {std::move(count), std::move(total_order), std::move(average)};
}

LocalStats LocalStats::from_totals(int vertex, BigInt count, BigInt total_order) {
  Rational average = ratio(total_order, count);
  return {vertex, std::move(count), std::move(total_order), std::move(average)};
}

std::vector<VertexSet> connected_sets(const Graph& g) {
  std::vector<VertexSet> out;
  for_each_connected_set(g, [&](VertexSet s) { out.push_back(s); });
  return out;
}

ConnStats stats(const Graph& g) {
  require_masks(g, "stats");
  require_connected(g);
  const auto rows = g.mask_rows();
  const std::uint64_t all = g.all_vertices().bits();
  Tally tally;
  for (int r = 0; r < g.order(); ++r) {
    const std::uint64_t allowed = all & detail::above(r);
    tally_supersets(rows.data(), std::uint64_t{1} << r, rows[r] & allowed, 0, allowed, tally);
  }
  return ConnStats::from_totals(to_big(tally.count), to_big(tally.total));
}

LocalStats local_stats(const Graph& g, int v) {
  require_masks(g, "local_stats");
  if (v < 0 || v >= g.order()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  require_connected(g);
  const auto rows = g.mask_rows();
  Tally tally;
  tally_supersets(rows.data(), std::uint64_t{1} << v, rows[v], 0, g.all_vertices().bits(), tally);
  return LocalStats::from_totals(v, to_big(tally.count), to_big(tally.total));
}

std::vector<LocalStats> local_stats_all(const Graph& g) {
  std::vector<LocalStats> out;
  out.reserve(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) out.push_back(local_stats(g, v));
  return out;
}

SeededAverage seeded_average(const Graph& h, VertexSet seeds) {
  if (h.order() >= kMaxMaskOrder) throw CapacityError("seeded_average supports at most 63 vertices");
  if (!seeds.subset_of(h.all_vertices())) throw std::invalid_argument("seed outside the graph");
  const auto labels = component_labels(h);
  std::vector<bool> seeded(static_cast<std::size_t>(h.order()), false);
  for (int s : seeds) seeded[labels[s]] = true;
  for (int v = 0; v < h.order(); ++v) {
    if (!seeded[labels[v]]) {
      throw std::invalid_argument("seed set misses the component of vertex " + std::to_string(v));
    }
  }

  // Join a new apex to every seed: U qualifies iff U + apex is connected.
  const int apex = h.order();
  std::vector<Edge> edges = h.edges();
  for (int s : seeds) edges.push_back({s, apex});
  const LocalStats rooted = local_stats(Graph(apex + 1, edges), apex);
  return {rooted.count, ratio(rooted.total_order - rooted.count, rooted.count)};
}

std::vector<LocalBoundRow> check_local_bound(const Graph& g) {
  const Rational bound(g.order() + 1, 2);
  std::vector<LocalBoundRow> rows;
  for (const LocalStats& local : local_stats_all(g)) {
    rows.push_back({local.vertex, local.average, bound, local.average >= bound, local.average == bound});
  }
  return rows;
}

bool is_spider_plus_neighbor_edges(const Graph& g, int v) {
  const auto around = g.neighbors(v);
  std::vector<bool> near(static_cast<std::size_t>(g.order()), false);
  for (int u : around) near[u] = true;
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (!(near[e.u] && near[e.v])) kept.push_back(e);
  }
  const Graph spider(g.order(), kept);
  if (!is_tree(spider)) return false;
  for (int u = 0; u < spider.order(); ++u) {
    if (u != v && spider.degree(u) > 2) return false;
  }
  return true;
}

}  // namespace avgconn
