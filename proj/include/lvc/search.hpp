#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lvc/graph.hpp"

namespace lvc {

struct TieBreaker {
  enum class Mode { ascending, seeded };
  Mode mode = Mode::ascending;
  std::uint64_t seed = 0;

  static TieBreaker ascending() { return {}; }
  static TieBreaker seeded(std::uint64_t seed) {
    return {Mode::seeded, seed};
  }
};

// Rooted search tree over a hop-aware subgraph. Every edge of the subgraph
// is classified exactly once: tree edges point parent to child, back edges
// point from the later-discovered endpoint to the earlier one.
struct SearchTree {
  enum class Kind { bfs, dfs };
  Kind kind = Kind::bfs;
  int root = 0;
  std::vector<int> order;   // discovery index per vertex, root = 0
  std::vector<int> parent;  // -1 at the root
  std::vector<std::pair<int, int>> tree_edges;  // (parent, child)
  std::vector<std::pair<int, int>> back_edges;  // (later, earlier)
};

// Level-order traversal from the subgraph root; within a frontier,
// neighbours are taken in tie order. Tree level equals dist from the root.
SearchTree bfs_tree(const HopAwareSubgraph& sub, const TieBreaker& tie);

// Depth-first traversal with an explicit stack; neighbours are tried in tie
// order. Every back edge targets an ancestor of its source.
SearchTree dfs_tree(const HopAwareSubgraph& sub, const TieBreaker& tie);

}  // namespace lvc
