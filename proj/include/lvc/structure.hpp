#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lvc/graph.hpp"

namespace lvc {

// Shortest-path graph between two vertices: every vertex and edge lying on
// at least one shortest path between them. Local ids, to_global ascending.
struct Spg {
  Graph graph;
  std::pair<int, int> endpoints;  // local ids of the two defining vertices
  std::vector<int> to_global;
};

// Union of the shortest-path graphs from a centre to every vertex of its
// delta-ball. Equivalently the ball with its level-crossing edges.
struct Espg {
  Graph graph;
  int center = 0;  // local id
  int delta = 1;
  std::vector<int> to_global;
};

struct BiconnReport {
  std::vector<int> cut_vertices;
  std::vector<std::pair<int, int>> cut_edges;  // (a, b) with a < b
  std::vector<int> in_cycle;  // vertices inside a biconnected block with >= 2 edges
};

Spg spg(const Graph& g, int u, int v);

Espg espg(const Graph& g, int v, int delta);

BiconnReport tarjan_biconnectivity(const Graph& g);

// Connected with no cut vertex.
bool vertex_biconnected(const Graph& g);

// Connected with no cut edge.
bool edge_biconnected(const Graph& g);

struct ConsistencyReport {
  std::vector<std::string> violations;
  bool pass() const { return violations.empty(); }
};

// Refines the disjoint union with depth-first local colouring at the given
// radius and checks that colours respect biconnectivity structure: equal
// vertex colours force equal cut-vertex status and equal cycle membership,
// equal edge colour pairs force equal bridge status, and a pair where
// exactly one graph is vertex- or edge-biconnected must be distinguished.
ConsistencyReport consistency_check(const Graph& g1, const Graph& g2,
                                    int delta);

}  // namespace lvc
