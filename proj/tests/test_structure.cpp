#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "lvc/graph.hpp"
#include "lvc/refine.hpp"
#include "lvc/structure.hpp"

using namespace lvc;

namespace {

// Component count after deleting one vertex (with its edges) or one edge,
// the removal oracle for cut vertices and bridges.
int components(const Graph& g, int skip_vertex, std::pair<int, int> skip_edge) {
  std::vector<int> comp(g.n, -1);
  int count = 0;
  for (int s = 0; s < g.n; ++s) {
    if (s == skip_vertex || comp[s] != -1) continue;
    comp[s] = count;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : g.adjacency[u]) {
        if (w == skip_vertex || comp[w] != -1) continue;
        const auto e = std::minmax(u, w);
        if (std::pair(e.first, e.second) == skip_edge) continue;
        comp[w] = count;
        stack.push_back(w);
      }
    }
    ++count;
  }
  return count;
}

std::vector<int> removal_cut_vertices(const Graph& g) {
  // Deleting v drops it from the count, so a split strictly raises the
  // total while an isolated deletion lowers it.
  const int base = components(g, -1, {-1, -1});
  std::vector<int> out;
  for (int v = 0; v < g.n; ++v) {
    if (components(g, v, {-1, -1}) > base) out.push_back(v);
  }
  return out;
}

std::vector<std::pair<int, int>> removal_bridges(const Graph& g) {
  const int base = components(g, -1, {-1, -1});
  std::vector<std::pair<int, int>> out;
  for (const auto& e : g.edges()) {
    if (components(g, -1, e) > base) out.push_back(e);
  }
  return out;
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const double x =
          static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
      if (x < p) es.emplace_back(u, v);
    }
  }
  return graph_from_edges(n, es);
}

}  // namespace

TEST_CASE("spg keeps exactly the vertices and edges on shortest paths") {
  SUBCASE("antipodal vertices of an even cycle span the whole cycle") {
    const Graph g = generate("cycle", {6});
    const Spg s = spg(g, 0, 3);
    CHECK(s.to_global == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(s.graph.edge_count == 6);
    CHECK(s.to_global[s.endpoints.first] == 0);
    CHECK(s.to_global[s.endpoints.second] == 3);
  }

  SUBCASE("two-apart vertices of a cycle give one path") {
    const Graph g = generate("cycle", {6});
    const Spg s = spg(g, 0, 2);
    CHECK(s.to_global == std::vector<int>{0, 1, 2});
    CHECK(s.graph.edge_count == 2);
  }

  SUBCASE("adjacent vertices give a single edge even in a clique") {
    const Graph g = generate("complete", {4});
    const Spg s = spg(g, 1, 3);
    CHECK(s.to_global == std::vector<int>{1, 3});
    CHECK(s.graph.n == 2);
    CHECK(s.graph.edge_count == 1);
  }

  SUBCASE("diamond: two parallel shortest paths both survive") {
    const Graph g =
        graph_from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    const Spg s = spg(g, 0, 3);
    CHECK(s.to_global == std::vector<int>{0, 1, 2, 3});
    // Edge {1,2} joins two vertices at the same distance from 0 and lies on
    // no shortest 0-3 path.
    CHECK(s.graph.edge_count == 4);
  }

  SUBCASE("errors") {
    const Graph g = generate("union_cycles", {3, 3});
    CHECK_THROWS_AS((void)spg(g, 0, 5), std::invalid_argument);
    CHECK_THROWS_AS((void)spg(g, 0, 9), std::invalid_argument);
  }
}

TEST_CASE("espg is the ball plus its level-crossing edges") {
  SUBCASE("two-hop view of a six-cycle is a five-path") {
    const Graph g = generate("cycle", {6});
    const Espg e = espg(g, 0, 2);
    CHECK(e.to_global == std::vector<int>{0, 1, 2, 4, 5});
    CHECK(e.graph.edge_count == 4);
    CHECK(e.to_global[e.center] == 0);
    CHECK(e.delta == 2);
  }

  SUBCASE("triangle at radius one keeps only the spokes") {
    const Graph g = generate("cycle", {3});
    const Espg e = espg(g, 0, 1);
    CHECK(e.graph.n == 3);
    // The rim edge joins two vertices at distance 1, crossing no level.
    CHECK(e.graph.edge_count == 2);
  }

  SUBCASE("matches the union of the shortest-path graphs to the ball") {
    const std::vector<Graph> graphs = {
        generate("uneven_barbell", {3, 4, 1}),
        generate("rook4x4", {}),
        graph_from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}),
    };
    for (const auto& g : graphs) {
      for (int v = 0; v < g.n; v += 3) {
        for (int delta : {1, 2}) {
          const Espg e = espg(g, v, delta);
          const DistanceMap dm = distances_from(g, v, delta);
          std::set<int> verts;
          std::set<std::pair<int, int>> edges;
          for (int u = 0; u < g.n; ++u) {
            if (!dm.reached(u)) continue;
            const Spg s = spg(g, v, u);
            for (int x : s.to_global) verts.insert(x);
            for (const auto& ed : s.graph.edges()) {
              edges.insert(std::minmax(s.to_global[ed.first],
                                       s.to_global[ed.second]));
            }
          }
          CHECK(std::vector<int>(verts.begin(), verts.end()) == e.to_global);
          std::set<std::pair<int, int>> got;
          for (const auto& ed : e.graph.edges()) {
            got.insert(
                std::minmax(e.to_global[ed.first], e.to_global[ed.second]));
          }
          CHECK(got == edges);
        }
      }
    }
  }
}

TEST_CASE("tarjan biconnectivity pins") {
  SUBCASE("path: every interior vertex cuts, every edge bridges") {
    const auto r = tarjan_biconnectivity(generate("path", {3}));
    CHECK(r.cut_vertices == std::vector<int>{1});
    CHECK(r.cut_edges ==
          std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(r.in_cycle.empty());
  }

  SUBCASE("cycle: no cuts, everything on the cycle") {
    const auto r = tarjan_biconnectivity(generate("cycle", {6}));
    CHECK(r.cut_vertices.empty());
    CHECK(r.cut_edges.empty());
    CHECK(r.in_cycle == std::vector<int>{0, 1, 2, 3, 4, 5});
  }

  SUBCASE("barbell: the connecting path cuts") {
    const auto r = tarjan_biconnectivity(generate("uneven_barbell", {3, 3, 2}));
    // Cliques {0,1,2} and {5,6,7}, path 2-3-4-5.
    CHECK(r.cut_vertices == std::vector<int>{2, 3, 4, 5});
    CHECK(r.cut_edges ==
          std::vector<std::pair<int, int>>{{2, 3}, {3, 4}, {4, 5}});
    CHECK(r.in_cycle == std::vector<int>{0, 1, 2, 5, 6, 7});
  }

  SUBCASE("biconnectivity predicates") {
    CHECK(vertex_biconnected(generate("cycle", {4})));
    CHECK(edge_biconnected(generate("cycle", {4})));
    CHECK_FALSE(vertex_biconnected(generate("path", {3})));
    CHECK_FALSE(edge_biconnected(generate("path", {3})));
    CHECK_FALSE(vertex_biconnected(generate("union_cycles", {3, 3})));
    CHECK_FALSE(edge_biconnected(generate("union_cycles", {3, 3})));
    // Two triangles sharing a vertex: edge-biconnected but not
    // vertex-biconnected.
    const Graph bowtie = graph_from_edges(
        5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
    CHECK_FALSE(vertex_biconnected(bowtie));
    CHECK(edge_biconnected(bowtie));
  }
}

TEST_CASE("tarjan agrees with the removal oracle on random graphs") {
  std::mt19937_64 rng(20108);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 24);
    const double p = 0.08 + 0.04 * static_cast<double>(trial % 6);
    const Graph g = random_graph(rng, n, p);
    const auto r = tarjan_biconnectivity(g);
    CHECK(r.cut_vertices == removal_cut_vertices(g));
    CHECK(r.cut_edges == removal_bridges(g));
    // A vertex is on a cycle exactly when some incident edge is not a
    // bridge.
    std::set<std::pair<int, int>> bridges(r.cut_edges.begin(),
                                          r.cut_edges.end());
    std::vector<int> cyc;
    for (int v = 0; v < g.n; ++v) {
      bool on = false;
      for (int w : g.adjacency[v]) {
        if (!bridges.count(std::minmax(v, w))) on = true;
      }
      if (on) cyc.push_back(v);
    }
    CHECK(r.in_cycle == cyc);
  }
}

TEST_CASE("consistency check accepts structure-preserving pairs") {
  SUBCASE("identical cycles") {
    const auto r = consistency_check(generate("cycle", {6}),
                                     generate("cycle", {6}), 2);
    CHECK(r.pass());
  }

  SUBCASE("barbell against itself") {
    const Graph g = generate("uneven_barbell", {3, 3, 1});
    const auto r = consistency_check(g, g, 2);
    CHECK(r.pass());
  }

  SUBCASE("cycle against a barbell distinguishes biconnectivity") {
    const auto r = consistency_check(generate("cycle", {5}),
                                     generate("uneven_barbell", {3, 3, 1}), 2);
    CHECK(r.pass());
  }

  SUBCASE("random connected pairs stay violation-free") {
    std::mt19937_64 rng(4417);
    for (int trial = 0; trial < 8; ++trial) {
      const int n = 5 + static_cast<int>(rng() % 8);
      Graph a = random_graph(rng, n, 0.35);
      Graph b = random_graph(rng, n, 0.35);
      if (!is_connected(a) || !is_connected(b)) continue;
      for (int delta : {1, 2}) {
        CHECK(consistency_check(a, b, delta).pass());
      }
    }
  }
}

TEST_CASE("depth colours separate cut vertices from block interiors") {
  // Barbell cliques are in cycles, the path interior is not; the depth-first
  // colouring at radius 2 must give them different colours.
  const Graph g = generate("uneven_barbell", {3, 3, 2});
  ColourTable table;
  const auto r = refine_lvc(g, 2, Scheme::dfc, table);
  CHECK(r.colouring[3] != r.colouring[0]);
  CHECK(r.colouring[3] != r.colouring[2]);
  // Clique attachment vertices are cut vertices, interior clique vertices
  // are not.
  CHECK(r.colouring[2] != r.colouring[0]);
  // Symmetric positions share colours.
  CHECK(r.colouring[0] == r.colouring[1]);
  CHECK(r.colouring[0] == r.colouring[6]);
  CHECK(r.colouring[2] == r.colouring[5]);
  CHECK(r.colouring[3] == r.colouring[4]);
}

TEST_CASE("adjacent pair colours can differ while shortest-path graphs agree") {
  // On a path, every adjacent pair spans a single-edge shortest-path graph,
  // but the rooted colours of an end pair and an interior pair differ.
  const Graph g = generate("path", {4});
  ColourTable table;
  const auto r = refine_lvc(g, 3, Scheme::bfc, table);

  const auto rooted_pair = [&](int u, int v) {
    const auto& rv = r.rooted[v];
    int ul = -1;
    for (int i = 0; i < rv.sub.graph.n; ++i) {
      if (rv.sub.to_global[i] == u) ul = i;
    }
    REQUIRE(ul >= 0);
    const auto& ru = r.rooted[u];
    int vl = -1;
    for (int i = 0; i < ru.sub.graph.n; ++i) {
      if (ru.sub.to_global[i] == v) vl = i;
    }
    REQUIRE(vl >= 0);
    return std::pair(rv.colour[ul], ru.colour[vl]);
  };

  const auto p01 = rooted_pair(0, 1);
  const auto p12 = rooted_pair(1, 2);
  const bool plain = p01 == p12;
  const bool swapped =
      p01 == std::pair(p12.second, p12.first);
  CHECK_FALSE(plain);
  CHECK_FALSE(swapped);

  const Spg s01 = spg(g, 0, 1);
  const Spg s12 = spg(g, 1, 2);
  CHECK(brute_iso(s01.graph, s12.graph));
}

TEST_CASE("equal ego views do not force equal colours") {
  // Path of seven vertices at radius two: vertices 2 and 3 both see a
  // five-path ego view, yet their colours differ.
  const Graph g = generate("path", {7});
  ColourTable table;
  const auto r = refine_lvc(g, 2, Scheme::bfc, table);
  CHECK(r.colouring[2] != r.colouring[3]);
  const Espg e2 = espg(g, 2, 2);
  const Espg e3 = espg(g, 3, 2);
  CHECK(brute_iso(e2.graph, e3.graph));
}
