#include "lvc/search.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace lvc {
namespace {

// Seeded ties shuffle a priority permutation; the stream is derived from the
// seed and the root's global id so distinct roots do not share an order.
std::vector<std::vector<int>> ordered_adjacency(const HopAwareSubgraph& sub,
                                                const TieBreaker& tie) {
  const Graph& g = sub.graph;
  std::vector<std::vector<int>> adj = g.adjacency;
  if (tie.mode == TieBreaker::Mode::ascending) return adj;

  const std::uint64_t root_id =
      static_cast<std::uint64_t>(sub.to_global[sub.root_local]) + 1;
  std::mt19937_64 rng(tie.seed ^ (0x9e3779b97f4a7c15ULL * root_id));
  std::vector<int> priority(g.n);
  std::iota(priority.begin(), priority.end(), 0);
  for (int i = g.n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(priority[i], priority[j]);
  }
  for (auto& nbrs : adj) {
    std::sort(nbrs.begin(), nbrs.end(),
              [&](int a, int b) { return priority[a] < priority[b]; });
  }
  return adj;
}

// Classifies every subgraph edge as tree or back once discovery order and
// parents are known. Tree edges keep discovery order; back edges are
// oriented later-discovered to earlier-discovered and sorted by that order.
void classify_edges(const Graph& g, SearchTree& t) {
  for (const auto& [u, v] : g.edges()) {
    if (t.parent[v] == u || t.parent[u] == v) continue;
    if (t.order[u] > t.order[v]) {
      t.back_edges.emplace_back(u, v);
    } else {
      t.back_edges.emplace_back(v, u);
    }
  }
  std::sort(t.back_edges.begin(), t.back_edges.end(),
            [&](const auto& a, const auto& b) {
              return std::pair(t.order[a.first], t.order[a.second]) <
                     std::pair(t.order[b.first], t.order[b.second]);
            });
}

}  // namespace

SearchTree bfs_tree(const HopAwareSubgraph& sub, const TieBreaker& tie) {
  const Graph& g = sub.graph;
  const auto adj = ordered_adjacency(sub, tie);
  SearchTree t;
  t.kind = SearchTree::Kind::bfs;
  t.root = sub.root_local;
  t.order.assign(g.n, -1);
  t.parent.assign(g.n, -1);

  std::vector<int> queue;
  queue.reserve(g.n);
  queue.push_back(t.root);
  t.order[t.root] = 0;
  int next_order = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (int v : adj[u]) {
      if (t.order[v] != -1) continue;
      t.order[v] = next_order++;
      t.parent[v] = u;
      t.tree_edges.emplace_back(u, v);
      queue.push_back(v);
    }
  }
  if (next_order != g.n) {
    throw std::invalid_argument("bfs_tree: subgraph is not connected");
  }
  classify_edges(g, t);
  return t;
}

SearchTree dfs_tree(const HopAwareSubgraph& sub, const TieBreaker& tie) {
  const Graph& g = sub.graph;
  const auto adj = ordered_adjacency(sub, tie);
  SearchTree t;
  t.kind = SearchTree::Kind::dfs;
  t.root = sub.root_local;
  t.order.assign(g.n, -1);
  t.parent.assign(g.n, -1);

  std::vector<std::size_t> next(g.n, 0);
  std::vector<int> stack;
  stack.reserve(g.n);
  stack.push_back(t.root);
  t.order[t.root] = 0;
  int next_order = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    if (next[u] == adj[u].size()) {
      stack.pop_back();
      continue;
    }
    const int v = adj[u][next[u]++];
    if (t.order[v] != -1) continue;
    t.order[v] = next_order++;
    t.parent[v] = u;
    t.tree_edges.emplace_back(u, v);
    stack.push_back(v);
  }
  if (next_order != g.n) {
    throw std::invalid_argument("dfs_tree: subgraph is not connected");
  }
  classify_edges(g, t);
  return t;
}

}  // namespace lvc
