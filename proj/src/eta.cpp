#include "lvc/eta.hpp"

#include <algorithm>
#include <stdexcept>

namespace lvc {

std::vector<BackEdgeRef> back_edge_refs(const SearchTree& tree) {
  std::vector<BackEdgeRef> refs;
  refs.reserve(tree.back_edges.size());
  for (const auto& [from, to] : tree.back_edges) {
    refs.push_back({from, to, tree.order[from], tree.order[to]});
  }
  std::sort(refs.begin(), refs.end(), [](const auto& a, const auto& b) {
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
  });
  return refs;
}

bool covers(const SearchTree& tree, const BackEdgeRef& e, int w) {
  // Walk up from the deep endpoint; if e.to is not an ancestor the walk
  // terminates at the root without matching.
  int x = e.from;
  while (x != -1) {
    if (x == w) return true;
    if (x == e.to) return false;
    x = tree.parent[x];
  }
  return false;
}

namespace {

// Deeper endpoints of the tree edges on the path from e.from up to e.to:
// every vertex of the walk except e.to itself. Two fundamental cycles share
// a tree edge exactly when these sets intersect.
std::vector<int> chain_below(const SearchTree& tree, const BackEdgeRef& e) {
  std::vector<int> out;
  for (int x = e.from; x != e.to && x != -1; x = tree.parent[x]) {
    out.push_back(x);
  }
  return out;
}

}  // namespace

bool crossover(const SearchTree& tree, const BackEdgeRef& a,
               const BackEdgeRef& b) {
  const auto ca = chain_below(tree, a);
  for (int x = b.from; x != b.to && x != -1; x = tree.parent[x]) {
    if (std::find(ca.begin(), ca.end(), x) != ca.end()) return true;
  }
  return false;
}

CoverClosure cover_closure(const SearchTree& tree, int u) {
  const auto refs = back_edge_refs(tree);
  CoverClosure out;
  std::vector<char> in_d(refs.size(), 0);
  for (std::size_t k = 0; k < refs.size(); ++k) {
    if (covers(tree, refs[k], u)) {
      out.q.push_back(refs[k]);
      in_d[k] = 1;
    }
  }
  out.d = out.q;
  // Closure scan: admit any edge crossing one already admitted, repeat until
  // a full pass admits nothing.
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t k = 0; k < refs.size(); ++k) {
      if (in_d[k]) continue;
      for (const auto& e : out.d) {
        if (crossover(tree, refs[k], e)) {
          in_d[k] = 1;
          out.d.push_back(refs[k]);
          grew = true;
          break;
        }
      }
    }
  }
  std::sort(out.d.begin(), out.d.end(), [](const auto& a, const auto& b) {
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
  });
  for (const auto& e : out.d) {
    int x = e.from;
    while (x != -1) {
      out.b.push_back(x);
      if (x == e.to) break;
      x = tree.parent[x];
    }
  }
  std::sort(out.b.begin(), out.b.end());
  out.b.erase(std::unique(out.b.begin(), out.b.end()), out.b.end());
  return out;
}

std::vector<int> eta_bfc(const HopAwareSubgraph& sub, const SearchTree& tree,
                         int u) {
  if (tree.kind != SearchTree::Kind::bfs) {
    throw std::invalid_argument("eta_bfc: requires a bfs tree");
  }
  if (u == tree.root) {
    throw std::invalid_argument("eta_bfc: undefined at the root");
  }
  const int level = sub.dist[u];
  std::vector<int> out;
  for (int o : sub.graph.adjacency[u]) {
    if (sub.dist[o] == level - 1) out.push_back(o);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> eta_dfc(const HopAwareSubgraph& sub, const SearchTree& tree,
                         int u) {
  (void)sub;
  if (tree.kind != SearchTree::Kind::dfs) {
    throw std::invalid_argument("eta_dfc: requires a dfs tree");
  }
  if (u == tree.root) {
    throw std::invalid_argument("eta_dfc: undefined at the root");
  }
  CoverClosure cc = cover_closure(tree, u);
  std::vector<int> out = cc.b;
  out.push_back(tree.parent[u]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace lvc
