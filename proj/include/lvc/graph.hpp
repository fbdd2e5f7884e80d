#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lvc {

// Vertex ids are dense integers 0..n-1. A VertexSet is kept strictly ascending.
using VertexSet = std::vector<int>;

struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adjacency;  // per vertex, strictly ascending
  int edge_count = 0;

  int degree(int v) const { return static_cast<int>(adjacency[v].size()); }
  bool has_edge(int u, int v) const;
  // Each undirected edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;
};

// Builds a simple undirected graph. Rejects out-of-range endpoints,
// self-loops and duplicate edges.
Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

// g2's vertices are appended after g1's, offset by g1.n.
Graph disjoint_union(const Graph& g1, const Graph& g2);

bool is_connected(const Graph& g);

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// Text format: optional '#' comment lines; first data line "n m"; then m
// lines "u v", one undirected edge each, either orientation. LF or CRLF.
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

// Families: cycle(n), union_cycles(k,len), path(n), complete(n), rook4x4,
// shrikhande, uneven_barbell(a,b,p).
Graph generate(const std::string& family, const std::vector<int>& params);

struct DistanceMap {
  static constexpr int kUnreachable = -1;
  std::vector<int> dist;  // -1 where unreachable or beyond the cutoff

  bool reached(int v) const { return dist[v] != kUnreachable; }
  int operator[](int v) const { return dist[v]; }
  int size() const { return static_cast<int>(dist.size()); }
};

// Exact BFS hop distances for every vertex with d(source, v) <= cutoff.
// The default cutoff is large enough to reach the whole graph.
DistanceMap distances_from(const Graph& g, int source,
                           int cutoff = std::numeric_limits<int>::max());

// N_delta(v): vertices u with 1 <= d(v, u) <= delta. Excludes v itself.
VertexSet neighborhood(const Graph& g, int v, int delta);

struct HopAwareSubgraph {
  Graph graph;                 // induced on {v} + N_delta(v), local ids
  std::vector<int> to_global;  // ascending, so local id order mirrors global
  int root_local = 0;
  DistanceMap dist;            // distance from the root, indexed by local id
};

HopAwareSubgraph hop_subgraph(const Graph& g, int v, int delta);

// Exhaustive isomorphism test with degree pruning. Graphs above 10 vertices
// are an error, not a negative answer.
bool brute_iso(const Graph& g1, const Graph& g2);

// Relabels g; the new id of vertex v is perm[v]. perm must be a bijection.
Graph permute(const Graph& g, const std::vector<int>& perm);

}  // namespace lvc
