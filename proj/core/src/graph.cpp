#include "rds/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "rds/errors.hpp"

namespace rds {

namespace {

// Combination masks live in a uint64_t, so enumeration is hard-capped here
// no matter what limit the caller passes.
constexpr int kMaskBits = 63;

void validate_set(const GraphSpec& g, const VertexSet& s) {
  int prev = 0;
  for (int v : s) {
    if (v < 1 || v > g.order)
      throw InvalidVertex("vertex " + std::to_string(v) + " outside 1.." +
                          std::to_string(g.order));
    if (v <= prev)
      throw InvalidVertex("vertex set must be strictly increasing");
    prev = v;
  }
}

std::vector<std::uint64_t> neighbour_masks(const GraphSpec& g) {
  std::vector<std::uint64_t> nbr(static_cast<std::size_t>(g.order) + 1, 0);
  for (auto [a, b] : g.edges) {
    nbr[static_cast<std::size_t>(a)] |= std::uint64_t(1) << (b - 1);
    nbr[static_cast<std::size_t>(b)] |= std::uint64_t(1) << (a - 1);
  }
  return nbr;
}

bool is_rds_mask(const std::vector<std::uint64_t>& nbr, std::uint64_t full,
                 std::uint64_t members) {
  const std::uint64_t outside = full & ~members;
  for (std::uint64_t rem = outside; rem != 0; rem &= rem - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(rem)) + 1;
    if ((nbr[v] & members) == 0) return false;  // not dominated
    if ((nbr[v] & outside) == 0) return false;  // not restrained
  }
  return true;
}

void check_enumerable(const GraphSpec& g, int limit) {
  const int effective = std::min(limit, kMaskBits);
  if (g.order > effective)
    throw OrderTooLarge("refusing subset enumeration over " +
                        std::to_string(g.order) + " vertices (limit " +
                        std::to_string(effective) + ")");
}

// Visit every restrained dominating set of size i as a bit mask, in
// increasing numeric order (Gosper's hack walks the combinations).
template <typename Visit>
void for_each_rds_mask(const GraphSpec& g, int i, Visit&& visit) {
  const auto nbr = neighbour_masks(g);
  const int n = g.order;
  const std::uint64_t full = (std::uint64_t(1) << n) - 1;
  if (i == 0) {
    if (is_rds_mask(nbr, full, 0)) visit(std::uint64_t(0));
    return;
  }
  for (std::uint64_t m = (std::uint64_t(1) << i) - 1; m <= full;) {
    if (is_rds_mask(nbr, full, m)) visit(m);
    const std::uint64_t low = m & (~m + 1);
    const std::uint64_t ripple = m + low;
    const std::uint64_t next = ripple | (((m ^ ripple) >> 2) / low);
    if (next <= m) break;
    m = next;
  }
}

}  // namespace

GraphSpec make_graph(int order, std::vector<std::pair<int, int>> edges) {
  if (order < 1)
    throw InvalidOrder("graph order must be >= 1, got " + std::to_string(order));
  GraphSpec g;
  g.order = order;
  for (auto& [a, b] : edges) {
    if (a < 1 || a > order || b < 1 || b > order)
      throw InvalidVertex("edge (" + std::to_string(a) + "," +
                          std::to_string(b) + ") outside 1.." +
                          std::to_string(order));
    if (a == b)
      throw InvalidVertex("self-loop at vertex " + std::to_string(a));
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw InvalidVertex("duplicate edge");
  g.edges = std::move(edges);
  g.adjacency.assign(static_cast<std::size_t>(order) + 1, {});
  for (auto [a, b] : g.edges) {
    g.adjacency[static_cast<std::size_t>(a)].push_back(b);
    g.adjacency[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

GraphSpec make_cycle(int n) {
  if (n < 3)
    throw InvalidOrder("cycle order must be >= 3, got " + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n));
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(1, n);
  return make_graph(n, std::move(edges));
}

GraphSpec make_path(int n) {
  if (n < 1)
    throw InvalidOrder("path order must be >= 1, got " + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  return make_graph(n, std::move(edges));
}

bool is_restrained_dominating(const GraphSpec& g, const VertexSet& s) {
  validate_set(g, s);
  std::vector<char> in_s(static_cast<std::size_t>(g.order) + 1, 0);
  for (int v : s) in_s[static_cast<std::size_t>(v)] = 1;
  for (int v = 1; v <= g.order; ++v) {
    if (in_s[static_cast<std::size_t>(v)]) continue;
    bool dominated = false;
    bool restrained = false;
    for (int u : g.adjacency[static_cast<std::size_t>(v)]) {
      (in_s[static_cast<std::size_t>(u)] ? dominated : restrained) = true;
      if (dominated && restrained) break;
    }
    if (!dominated || !restrained) return false;
  }
  return true;
}

std::vector<VertexSet> enumerate_rds(const GraphSpec& g, int i,
                                     int brute_force_limit) {
  if (i < 0 || i > g.order) return {};
  check_enumerable(g, brute_force_limit);
  std::vector<VertexSet> out;
  for_each_rds_mask(g, i, [&](std::uint64_t m) {
    VertexSet s;
    s.reserve(static_cast<std::size_t>(i));
    for (std::uint64_t rem = m; rem != 0; rem &= rem - 1)
      s.push_back(std::countr_zero(rem) + 1);
    out.push_back(std::move(s));
  });
  std::sort(out.begin(), out.end());
  return out;
}

Count count_rds(const GraphSpec& g, int i, int brute_force_limit) {
  if (i < 0 || i > g.order) return 0;
  check_enumerable(g, brute_force_limit);
  unsigned long hits = 0;
  for_each_rds_mask(g, i, [&](std::uint64_t) { ++hits; });
  return Count(hits);
}

CoefficientRow count_rds_by_cardinality(const GraphSpec& g,
                                        int brute_force_limit) {
  check_enumerable(g, brute_force_limit);
  CoefficientRow row{g.order, {}};
  for (int i = 0; i <= g.order; ++i) {
    Count c = count_rds(g, i, brute_force_limit);
    if (c != 0) row.counts.emplace(i, std::move(c));
  }
  return row;
}

std::vector<int> complement_component_sizes(const GraphSpec& g,
                                            const VertexSet& s) {
  validate_set(g, s);
  std::vector<char> skip(static_cast<std::size_t>(g.order) + 1, 0);
  for (int v : s) skip[static_cast<std::size_t>(v)] = 1;
  std::vector<int> sizes;
  std::vector<int> stack;
  for (int v = 1; v <= g.order; ++v) {
    if (skip[static_cast<std::size_t>(v)]) continue;
    int size = 0;
    stack.push_back(v);
    skip[static_cast<std::size_t>(v)] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      ++size;
      for (int w : g.adjacency[static_cast<std::size_t>(u)]) {
        if (!skip[static_cast<std::size_t>(w)]) {
          skip[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    sizes.push_back(size);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace rds
