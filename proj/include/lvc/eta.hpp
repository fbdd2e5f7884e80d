#pragma once

#include <vector>

#include "lvc/graph.hpp"
#include "lvc/search.hpp"

namespace lvc {

// A back edge together with the discovery indices of its endpoints,
// i = order[from] (deeper end), j = order[to] (ancestor end), so i > j.
struct BackEdgeRef {
  int from = 0;
  int to = 0;
  int i = 0;
  int j = 0;

  bool operator==(const BackEdgeRef&) const = default;
};

// Back edges of a search tree, sorted by (i, j) ascending.
std::vector<BackEdgeRef> back_edge_refs(const SearchTree& tree);

// True iff w lies on the tree path from e.from up to e.to, endpoints
// included. A back edge covers exactly the vertices of its tree path.
bool covers(const SearchTree& tree, const BackEdgeRef& e, int w);

// Two back edges cross over when their fundamental cycles share at least one
// tree edge. Cycles that meet only in a single vertex do not cross, which
// keeps closures inside one biconnected component and makes them independent
// of the traversal order that produced the tree.
bool crossover(const SearchTree& tree, const BackEdgeRef& a,
               const BackEdgeRef& b);

// Fixed point of the crossover relation seeded from the back edges covering
// a vertex: q = the seed edges, d = closure under crossover, b = every
// vertex covered by some edge of d.
struct CoverClosure {
  std::vector<BackEdgeRef> q;
  std::vector<BackEdgeRef> d;
  std::vector<int> b;
};

CoverClosure cover_closure(const SearchTree& tree, int u);

// Refinement neighbourhood for breadth-first trees: the neighbours of u in
// the subgraph that sit one level closer to the root. Undefined at the root.
std::vector<int> eta_bfc(const HopAwareSubgraph& sub, const SearchTree& tree,
                         int u);

// Refinement neighbourhood for depth-first trees: the tree parent plus every
// vertex covered by the crossover closure at u. Undefined at the root.
std::vector<int> eta_dfc(const HopAwareSubgraph& sub, const SearchTree& tree,
                         int u);

}  // namespace lvc
