#include "lvc/structure.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "lvc/refine.hpp"

namespace lvc {

Spg spg(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.n || v < 0 || v >= g.n) {
    throw std::invalid_argument("spg: vertex out of range");
  }
  const DistanceMap du = distances_from(g, u, g.n);
  if (!du.reached(v)) {
    throw std::invalid_argument("spg: endpoints are disconnected");
  }
  const DistanceMap dv = distances_from(g, v, g.n);
  const int dist = du[v];

  std::vector<int> to_global;
  for (int w = 0; w < g.n; ++w) {
    if (du.reached(w) && dv.reached(w) && du[w] + dv[w] == dist) {
      to_global.push_back(w);
    }
  }
  std::vector<int> to_local(g.n, -1);
  for (int i = 0; i < static_cast<int>(to_global.size()); ++i) {
    to_local[to_global[i]] = i;
  }
  std::vector<std::pair<int, int>> edges;
  for (int a : to_global) {
    for (int b : g.adjacency[a]) {
      if (a >= b || to_local[b] == -1) continue;
      // Edge (a, b) lies on a shortest path iff it advances by one level in
      // some orientation.
      const bool forward = du[a] + 1 + dv[b] == dist && du[b] == du[a] + 1;
      const bool backward = du[b] + 1 + dv[a] == dist && du[a] == du[b] + 1;
      if (forward || backward) edges.emplace_back(to_local[a], to_local[b]);
    }
  }
  Spg out;
  out.graph = graph_from_edges(static_cast<int>(to_global.size()), edges);
  out.endpoints = {to_local[u], to_local[v]};
  out.to_global = std::move(to_global);
  return out;
}

Espg espg(const Graph& g, int v, int delta) {
  if (v < 0 || v >= g.n) {
    throw std::invalid_argument("espg: vertex out of range");
  }
  if (delta < 1) {
    throw std::invalid_argument("espg: delta must be at least 1");
  }
  const HopAwareSubgraph sub = hop_subgraph(g, v, delta);
  // An edge of the ball lies on a shortest path from the centre to one of
  // its endpoints iff it crosses levels; same-level edges never do.
  std::vector<std::pair<int, int>> edges;
  for (const auto& [a, b] : sub.graph.edges()) {
    if (sub.dist[a] != sub.dist[b]) edges.emplace_back(a, b);
  }
  Espg out;
  out.graph = graph_from_edges(sub.graph.n, edges);
  out.center = sub.root_local;
  out.delta = delta;
  out.to_global = sub.to_global;
  return out;
}

BiconnReport tarjan_biconnectivity(const Graph& g) {
  const int n = g.n;
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::size_t> next(n, 0);
  std::vector<char> is_cut(n, 0), on_cycle(n, 0);
  std::vector<std::pair<int, int>> edge_stack;
  BiconnReport report;
  int timer = 0;

  // Pops one biconnected block off the edge stack. A single-edge block is a
  // bridge; a larger block puts all its vertices on a cycle.
  auto pop_block = [&](std::pair<int, int> last) {
    std::vector<std::pair<int, int>> block;
    while (true) {
      block.push_back(edge_stack.back());
      edge_stack.pop_back();
      if (block.back() == last) break;
    }
    if (block.size() == 1) {
      const auto [a, b] = block.front();
      report.cut_edges.emplace_back(std::min(a, b), std::max(a, b));
    } else {
      for (const auto& [a, b] : block) {
        on_cycle[a] = 1;
        on_cycle[b] = 1;
      }
    }
  };

  for (int s = 0; s < n; ++s) {
    if (disc[s] != -1) continue;
    int root_children = 0;
    std::vector<int> stack{s};
    disc[s] = low[s] = timer++;
    while (!stack.empty()) {
      const int u = stack.back();
      if (next[u] < g.adjacency[u].size()) {
        const int w = g.adjacency[u][next[u]++];
        if (disc[w] == -1) {
          parent[w] = u;
          if (u == s) ++root_children;
          edge_stack.emplace_back(u, w);
          disc[w] = low[w] = timer++;
          stack.push_back(w);
        } else if (w != parent[u] && disc[w] < disc[u]) {
          edge_stack.emplace_back(u, w);
          low[u] = std::min(low[u], disc[w]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          const int p = stack.back();
          low[p] = std::min(low[p], low[u]);
          if (low[u] >= disc[p]) {
            pop_block({p, u});
            if (p != s) is_cut[p] = 1;
          }
        }
      }
    }
    if (root_children >= 2) is_cut[s] = 1;
  }

  for (int u = 0; u < n; ++u) {
    if (is_cut[u]) report.cut_vertices.push_back(u);
    if (on_cycle[u]) report.in_cycle.push_back(u);
  }
  std::sort(report.cut_edges.begin(), report.cut_edges.end());
  return report;
}

bool vertex_biconnected(const Graph& g) {
  return is_connected(g) && tarjan_biconnectivity(g).cut_vertices.empty();
}

bool edge_biconnected(const Graph& g) {
  return is_connected(g) && tarjan_biconnectivity(g).cut_edges.empty();
}

ConsistencyReport consistency_check(const Graph& g1, const Graph& g2,
                                    int delta) {
  const Graph joint = disjoint_union(g1, g2);
  ColourTable table;
  const RefineResult r = refine_lvc(joint, delta, Scheme::dfc, table);
  const BiconnReport b1 = tarjan_biconnectivity(g1);
  const BiconnReport b2 = tarjan_biconnectivity(g2);

  std::vector<char> cut(joint.n, 0), cyc(joint.n, 0);
  for (int v : b1.cut_vertices) cut[v] = 1;
  for (int v : b2.cut_vertices) cut[g1.n + v] = 1;
  for (int v : b1.in_cycle) cyc[v] = 1;
  for (int v : b2.in_cycle) cyc[g1.n + v] = 1;

  auto vertex_name = [&](int v) {
    return v < g1.n ? "g1:" + std::to_string(v)
                    : "g2:" + std::to_string(v - g1.n);
  };

  ConsistencyReport out;
  std::map<int, int> first_of_colour;
  for (int v = 0; v < joint.n; ++v) {
    auto [it, fresh] = first_of_colour.try_emplace(r.colouring[v], v);
    if (fresh) continue;
    const int rep = it->second;
    if (cut[rep] != cut[v]) {
      out.violations.push_back("vertices " + vertex_name(rep) + " and " +
                               vertex_name(v) +
                               " share a colour but differ on cut-vertex status");
    }
    if (cyc[rep] != cyc[v]) {
      out.violations.push_back("vertices " + vertex_name(rep) + " and " +
                               vertex_name(v) +
                               " share a colour but differ on cycle membership");
    }
  }

  auto edge_name = [&](std::pair<int, int> e) {
    return "(" + vertex_name(e.first) + "," + vertex_name(e.second) + ")";
  };
  std::vector<char> bridge(joint.n * joint.n, 0);
  auto mark_bridge = [&](int a, int b) { bridge[a * joint.n + b] = 1; };
  for (const auto& [a, b] : b1.cut_edges) mark_bridge(std::min(a, b), std::max(a, b));
  for (const auto& [a, b] : b2.cut_edges) {
    mark_bridge(g1.n + std::min(a, b), g1.n + std::max(a, b));
  }
  std::map<std::pair<int, int>, std::pair<std::pair<int, int>, char>> edge_rep;
  for (const auto& [a, b] : joint.edges()) {
    const std::pair<int, int> key = {std::min(r.colouring[a], r.colouring[b]),
                                     std::max(r.colouring[a], r.colouring[b])};
    const char is_bridge = bridge[a * joint.n + b];
    auto [it, fresh] = edge_rep.try_emplace(key, std::pair{std::pair{a, b}, is_bridge});
    if (fresh) continue;
    if (it->second.second != is_bridge) {
      out.violations.push_back("edges " + edge_name(it->second.first) + " and " +
                               edge_name({a, b}) +
                               " share colour pairs but differ on bridge status");
    }
  }

  const Histogram h1 = histogram_of(
      Colouring(r.colouring.begin(), r.colouring.begin() + g1.n));
  const Histogram h2 = histogram_of(
      Colouring(r.colouring.begin() + g1.n, r.colouring.end()));
  if (vertex_biconnected(g1) != vertex_biconnected(g2) && h1 == h2) {
    out.violations.push_back(
        "exactly one graph is vertex-biconnected but the colour histograms match");
  }
  if (edge_biconnected(g1) != edge_biconnected(g2) && h1 == h2) {
    out.violations.push_back(
        "exactly one graph is edge-biconnected but the colour histograms match");
  }
  return out;
}

}  // namespace lvc
