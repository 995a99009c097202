#include "avgconn/tree_dp.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace avgconn {

SubtreeTally& SubtreeTally::operator*=(const SubtreeTally& other) {
  total_order = count * other.total_order + other.count * total_order;
  count *= other.count;
  return *this;
}

SubtreeTally operator*(SubtreeTally lhs, const SubtreeTally& rhs) {
  lhs *= rhs;
  return lhs;
}

namespace {

const SubtreeTally kUnit{1, 0};

struct RootedTree {
  std::vector<int> parent;
  std::vector<int> preorder;
};

// Rooted at 0; iterative so long paths do not exhaust the stack.
RootedTree root_tree(const Graph& t) {
  if (!is_tree(t)) throw GraphError("subtree DP needs a tree");
  const auto n = static_cast<std::size_t>(t.order());
  RootedTree rooted{std::vector<int>(n, -1), {}};
  rooted.preorder.reserve(n);
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    rooted.preorder.push_back(v);
    for (int w : t.neighbors(v)) {
      if (w != rooted.parent[v]) {
        rooted.parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  return rooted;
}

// down[v]: subtrees whose shallowest vertex is v.
std::vector<SubtreeTally> downward(const Graph& t, const RootedTree& rooted) {
  std::vector<SubtreeTally> down(static_cast<std::size_t>(t.order()), SubtreeTally::single());
  for (auto it = rooted.preorder.rbegin(); it != rooted.preorder.rend(); ++it) {
    const int v = *it;
    if (rooted.parent[v] >= 0) down[rooted.parent[v]] *= down[v].optional_branch();
  }
  return down;
}

__extension__ typedef unsigned __int128 u128;

// Same pass as downward() in 128-bit arithmetic; empty on overflow.
std::optional<std::pair<u128, u128>> narrow_totals(const RootedTree& rooted) {
  const std::size_t n = rooted.parent.size();
  std::vector<u128> count(n, 1);
  std::vector<u128> total(n, 1);
  u128 sum_count = 0;
  u128 sum_total = 0;
  bool overflow = false;
  for (auto it = rooted.preorder.rbegin(); it != rooted.preorder.rend(); ++it) {
    const int v = *it;
    overflow |= __builtin_add_overflow(sum_count, count[v], &sum_count);
    overflow |= __builtin_add_overflow(sum_total, total[v], &sum_total);
    const int p = rooted.parent[v];
    if (p < 0) continue;
    u128 branch = 0;
    u128 left = 0;
    u128 right = 0;
    overflow |= __builtin_add_overflow(count[v], u128{1}, &branch);
    overflow |= __builtin_mul_overflow(count[p], total[v], &left);
    overflow |= __builtin_mul_overflow(branch, total[p], &right);
    overflow |= __builtin_add_overflow(left, right, &total[p]);
    overflow |= __builtin_mul_overflow(count[p], branch, &count[p]);
    if (overflow) return std::nullopt;
  }
  return std::pair{sum_count, sum_total};
}

BigInt widen(u128 x) {
  BigInt out = static_cast<std::uint64_t>(x >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(x);
  return out;
}

}  // namespace

ConnStats tree_stats(const Graph& t) {
  const RootedTree rooted = root_tree(t);
  if (const auto narrow = narrow_totals(rooted)) {
    return ConnStats::from_totals(widen(narrow->first), widen(narrow->second));
  }
  BigInt count = 0;
  BigInt total = 0;
  for (const SubtreeTally& d : downward(t, rooted)) {
    count += d.count;
    total += d.total_order;
  }
  return ConnStats::from_totals(std::move(count), std::move(total));
}

std::vector<LocalStats> tree_local_stats_all(const Graph& t) {
  const RootedTree rooted = root_tree(t);
  const auto down = downward(t, rooted);
  const auto n = static_cast<std::size_t>(t.order());

  // up[c]: subtrees containing parent(c) but not c.
  std::vector<SubtreeTally> up(n, kUnit);
  std::vector<int> children;
  std::vector<SubtreeTally> suffix;
  for (int p : rooted.preorder) {
    children.clear();
    for (int w : t.neighbors(p)) {
      if (w != rooted.parent[p]) children.push_back(w);
    }
    if (children.empty()) continue;

    suffix.assign(children.size() + 1, kUnit);
    for (std::size_t i = children.size(); i-- > 0;) {
      suffix[i] = suffix[i + 1] * down[children[i]].optional_branch();
    }
    SubtreeTally prefix = SubtreeTally::single();
    if (rooted.parent[p] >= 0) prefix *= up[p].optional_branch();
    for (std::size_t i = 0; i < children.size(); ++i) {
      up[children[i]] = prefix * suffix[i + 1];
      prefix *= down[children[i]].optional_branch();
    }
  }

  std::vector<LocalStats> out;
  out.reserve(n);
  for (int v = 0; v < t.order(); ++v) {
    SubtreeTally full = down[v];
    if (rooted.parent[v] >= 0) full *= up[v].optional_branch();
    out.push_back(LocalStats::from_totals(v, std::move(full.count), std::move(full.total_order)));
  }
  return out;
}

ConnStats path_closed_form(long long n) {
  if (n < 1) throw std::invalid_argument("path order must be at least 1");
  const BigInt order = n;
  BigInt count = order * (order + 1) / 2;
  BigInt total = order * (order + 1) * (order + 2) / 6;
  return ConnStats::from_totals(std::move(count), std::move(total));
}

}  // namespace avgconn
