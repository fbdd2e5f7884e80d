#include "lvc/suite.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

#include "lvc/graph.hpp"
#include "lvc/refine.hpp"
#include "lvc/structure.hpp"

namespace lvc {
namespace {

// Corpus construction uses raw generator words so the graphs are identical
// across platforms and standard library versions.
double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

Graph er_graph(std::mt19937_64& rng, int n, double p) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (unit_double(rng) < p) edges.emplace_back(u, v);
    }
  }
  return graph_from_edges(n, edges);
}

// Random attachment tree plus a few extra edges, always connected.
Graph random_connected_graph(std::mt19937_64& rng, int n) {
  std::set<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) {
    edges.insert({static_cast<int>(rng() % static_cast<std::uint64_t>(v)), v});
  }
  for (int k = 0; k < n / 2; ++k) {
    const int a = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    const int b = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    if (a != b) edges.insert({std::min(a, b), std::max(a, b)});
  }
  return graph_from_edges(
      n, std::vector<std::pair<int, int>>(edges.begin(), edges.end()));
}

std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

int component_count(const Graph& g) {
  int count = 0;
  std::vector<char> seen(g.n, 0);
  for (int s = 0; s < g.n; ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : g.adjacency[u]) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

Graph without_vertex(const Graph& g, int v) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& [a, b] : g.edges()) {
    if (a == v || b == v) continue;
    edges.emplace_back(a < v ? a : a - 1, b < v ? b : b - 1);
  }
  return graph_from_edges(g.n - 1, edges);
}

Graph without_edge(const Graph& g, int a, int b) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& [x, y] : g.edges()) {
    if (x == a && y == b) continue;
    edges.emplace_back(x, y);
  }
  return graph_from_edges(g.n, edges);
}

// Removal oracle: deleting a cut vertex or a bridge raises the component
// count; deleting anything else does not.
std::vector<int> removal_cut_vertices(const Graph& g) {
  const int base = component_count(g);
  std::vector<int> out;
  for (int v = 0; v < g.n; ++v) {
    if (component_count(without_vertex(g, v)) > base) out.push_back(v);
  }
  return out;
}

std::vector<std::pair<int, int>> removal_bridges(const Graph& g) {
  const int base = component_count(g);
  std::vector<std::pair<int, int>> out;
  for (const auto& [a, b] : g.edges()) {
    if (component_count(without_edge(g, a, b)) > base) out.emplace_back(a, b);
  }
  return out;
}

std::vector<Graph> mixed_corpus() {
  std::mt19937_64 rng(1001);
  const double ps[3] = {0.2, 0.4, 0.6};
  std::vector<Graph> out;
  out.reserve(200);
  for (int i = 0; i < 200; ++i) out.push_back(er_graph(rng, 4 + (i % 9), ps[i % 3]));
  return out;
}

std::vector<std::pair<Graph, Graph>> pair_corpus() {
  std::mt19937_64 rng(1006);
  const double ps[3] = {0.3, 0.5, 0.7};
  std::vector<std::pair<Graph, Graph>> out;
  out.reserve(100);
  for (int i = 0; i < 100; ++i) {
    const int n = 4 + (i % 7);
    Graph a = er_graph(rng, n, ps[i % 3]);
    Graph b = er_graph(rng, n, ps[i % 3]);
    out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

std::vector<Graph> connected_corpus() {
  std::mt19937_64 rng(1009);
  std::vector<Graph> out;
  out.reserve(100);
  for (int i = 0; i < 100; ++i) {
    out.push_back(random_connected_graph(rng, 3 + (i % 18)));
  }
  return out;
}

std::vector<Graph> invariance_corpus() {
  std::mt19937_64 rng(1010);
  const double ps[3] = {0.3, 0.5, 0.7};
  std::vector<Graph> out;
  out.reserve(50);
  for (int i = 0; i < 50; ++i) out.push_back(er_graph(rng, 5 + (i % 8), ps[i % 3]));
  return out;
}

std::vector<Graph> correspondence_corpus() {
  std::mt19937_64 rng(1012);
  std::vector<Graph> out;
  out.reserve(50);
  for (int i = 0; i < 50; ++i) out.push_back(er_graph(rng, 4 + (i % 7), 0.5));
  return out;
}

CaseOutcome compare_case(const Graph& g1, const Graph& g2, MethodSpec m,
                         bool expect_distinguished) {
  const CompareReport rep = distinguishable(g1, g2, m);
  CaseOutcome out;
  out.pass = rep.distinguished == expect_distinguished;
  std::ostringstream os;
  os << (rep.distinguished ? "distinguished" : "not distinguished")
     << " after " << rep.rounds << " rounds";
  if (!out.pass) {
    os << ", expected "
       << (expect_distinguished ? "distinguished" : "not distinguished");
  }
  out.detail = os.str();
  return out;
}

std::string method_label(const MethodSpec& m) {
  std::string label = m.name();
  if (m.kind == MethodKind::bfc || m.kind == MethodKind::dfc) {
    label += " delta=" + std::to_string(m.delta);
  }
  return label;
}

int local_id(const HopAwareSubgraph& sub, int global) {
  const auto it =
      std::lower_bound(sub.to_global.begin(), sub.to_global.end(), global);
  return static_cast<int>(it - sub.to_global.begin());
}

}  // namespace

std::vector<SuiteCase> all_cases(std::uint64_t seed) {
  std::vector<SuiteCase> cases;

  auto add_pair_case = [&cases](std::string name, int criterion,
                                std::string generators, const Graph& g1,
                                const Graph& g2, MethodSpec m, bool expect,
                                std::string provenance) {
    cases.push_back({std::move(name), criterion, std::move(generators),
                     method_label(m),
                     expect ? "distinguished" : "not_distinguished",
                     std::move(provenance), [g1, g2, m, expect] {
                       return compare_case(g1, g2, m, expect);
                     }});
  };

  cases.push_back(
      {"bfc1-matches-wl1-partitions", 1,
       "er corpus: 200 graphs, n 4..12, p in {0.2,0.4,0.6}",
       "bfc delta=1 vs wl1", "property-pass", "literature", [] {
         const auto graphs = mixed_corpus();
         int agree = 0;
         std::string first;
         for (std::size_t i = 0; i < graphs.size(); ++i) {
           ColourTable ta, tb;
           const RefineResult a = refine_lvc(graphs[i], 1, Scheme::bfc, ta);
           const RefineResult b = refine_wl1(graphs[i], tb);
           if (partition_of(a.colouring) == partition_of(b.colouring)) {
             ++agree;
           } else if (first.empty()) {
             first = "; first mismatch at graph " + std::to_string(i);
           }
         }
         CaseOutcome out;
         out.pass = agree == static_cast<int>(graphs.size());
         out.detail = std::to_string(agree) + "/" +
                      std::to_string(graphs.size()) +
                      " stable partitions identical" + first;
         return out;
       }});

  const Graph two_c3 = generate("union_cycles", {2, 3});
  const Graph c6 = generate("cycle", {6});
  const std::string gen_c2 = "gen:union_cycles:2,3 vs gen:cycle:6";
  add_pair_case("pair-2xc3-c6-wl1", 2, gen_c2, two_c3, c6,
                {MethodKind::wl1, 0}, false, "literature");
  add_pair_case("pair-2xc3-c6-bfc1", 2, gen_c2, two_c3, c6,
                {MethodKind::bfc, 1}, false, "literature");
  add_pair_case("pair-2xc3-c6-bfc2", 2, gen_c2, two_c3, c6,
                {MethodKind::bfc, 2}, true, "literature");
  add_pair_case("pair-2xc3-c6-dfc1", 2, gen_c2, two_c3, c6,
                {MethodKind::dfc, 1}, true, "literature");

  const Graph two_c5 = generate("union_cycles", {2, 5});
  const Graph c10 = generate("cycle", {10});
  const std::string gen_c3 = "gen:union_cycles:2,5 vs gen:cycle:10";
  add_pair_case("pair-2xc5-c10-wl1", 3, gen_c3, two_c5, c10,
                {MethodKind::wl1, 0}, false, "literature");
  add_pair_case("pair-2xc5-c10-bfc2", 3, gen_c3, two_c5, c10,
                {MethodKind::bfc, 2}, false, "literature");
  add_pair_case("pair-2xc5-c10-bfc3", 3, gen_c3, two_c5, c10,
                {MethodKind::bfc, 3}, true, "literature");
  add_pair_case("pair-2xc5-c10-dfc1", 3, gen_c3, two_c5, c10,
                {MethodKind::dfc, 1}, false, "literature");
  add_pair_case("pair-2xc5-c10-dfc2", 3, gen_c3, two_c5, c10,
                {MethodKind::dfc, 2}, true, "literature");

  for (int delta = 1; delta <= 3; ++delta) {
    const Graph a = generate("union_cycles", {2, 2 * delta + 1});
    const Graph b = generate("cycle", {4 * delta + 2});
    const std::string gens = "gen:union_cycles:2," +
                             std::to_string(2 * delta + 1) + " vs gen:cycle:" +
                             std::to_string(4 * delta + 2);
    cases.push_back(
        {"hierarchy-ladder-delta" + std::to_string(delta), 4, gens,
         "bfc delta=" + std::to_string(delta) + " then delta=" +
             std::to_string(delta + 1),
         "property-pass", "literature", [a, b, delta] {
           const CompareReport at =
               distinguishable(a, b, {MethodKind::bfc, delta});
           const CompareReport above =
               distinguishable(a, b, {MethodKind::bfc, delta + 1});
           CaseOutcome out;
           out.pass = !at.distinguished && above.distinguished;
           std::ostringstream os;
           os << "delta=" << delta
              << (at.distinguished ? " distinguished (unexpected)" : " blind")
              << "; delta=" << delta + 1
              << (above.distinguished ? " distinguished"
                                      : " blind (unexpected)");
           out.detail = os.str();
           return out;
         }});
  }

  const Graph rook = generate("rook4x4", {});
  const Graph shrikhande = generate("shrikhande", {});
  const std::string gen_srg = "gen:rook4x4 vs gen:shrikhande";
  add_pair_case("srg-rook-shrikhande-wl1", 5, gen_srg, rook, shrikhande,
                {MethodKind::wl1, 0}, false, "literature");
  add_pair_case("srg-rook-shrikhande-fwl2", 5, gen_srg, rook, shrikhande,
                {MethodKind::fwl2, 0}, false, "literature");
  add_pair_case("srg-rook-shrikhande-dfc1", 5, gen_srg, rook, shrikhande,
                {MethodKind::dfc, 1}, true, "literature");

  cases.push_back(
      {"srg-local-cut-structure", 5, gen_srg,
       "tarjan_biconnectivity on every 1-hop subgraph", "property-pass",
       "literature", [rook, shrikhande] {
         int rook_cut = 0, shr_cut = 0;
         for (int v = 0; v < rook.n; ++v) {
           if (!tarjan_biconnectivity(hop_subgraph(rook, v, 1).graph)
                    .cut_vertices.empty()) {
             ++rook_cut;
           }
         }
         for (int v = 0; v < shrikhande.n; ++v) {
           if (!tarjan_biconnectivity(hop_subgraph(shrikhande, v, 1).graph)
                    .cut_vertices.empty()) {
             ++shr_cut;
           }
         }
         CaseOutcome out;
         out.pass = rook_cut == rook.n && shr_cut == 0;
         out.detail = "rook local subgraphs with a cut vertex: " +
                      std::to_string(rook_cut) + "/16; shrikhande: " +
                      std::to_string(shr_cut) + "/16";
         return out;
       }});

  cases.push_back(
      {"bfc-monotonicity-random-pairs", 6,
       "er pairs: 100, n 4..10, p in {0.3,0.5,0.7}",
       "bfc delta=1..3", "property-pass", "literature", [] {
         const auto pairs = pair_corpus();
         int antecedents = 0, violations = 0;
         for (const auto& [a, b] : pairs) {
           bool dist[4] = {false, false, false, false};
           for (int d = 1; d <= 3; ++d) {
             dist[d] = distinguishable(a, b, {MethodKind::bfc, d}).distinguished;
           }
           for (int d = 1; d <= 2; ++d) {
             if (!dist[d]) continue;
             ++antecedents;
             if (!dist[d + 1]) ++violations;
           }
         }
         CaseOutcome out;
         out.pass = violations == 0;
         out.detail = std::to_string(violations) +
                      " violations over 200 implications (" +
                      std::to_string(antecedents) + " antecedents held)";
         return out;
       }});

  cases.push_back(
      {"bfc-below-fwl2-random-pairs", 7,
       "er pairs: 100, n 4..10, p in {0.3,0.5,0.7}",
       "bfc delta=1..3 vs fwl2", "property-pass", "literature", [] {
         const auto pairs = pair_corpus();
         int antecedents = 0, violations = 0;
         for (const auto& [a, b] : pairs) {
           const bool fwl =
               distinguishable(a, b, {MethodKind::fwl2, 0}).distinguished;
           for (int d = 1; d <= 3; ++d) {
             if (!distinguishable(a, b, {MethodKind::bfc, d}).distinguished) {
               continue;
             }
             ++antecedents;
             if (!fwl) ++violations;
           }
         }
         CaseOutcome out;
         out.pass = violations == 0;
         out.detail = std::to_string(violations) +
                      " violations over 300 implications (" +
                      std::to_string(antecedents) + " antecedents held)";
         return out;
       }});

  cases.push_back(
      {"dfc1-refines-wl1", 8,
       "er corpus: 200 graphs, n 4..12, p in {0.2,0.4,0.6}",
       "dfc delta=1 vs wl1", "property-pass", "literature", [] {
         const auto graphs = mixed_corpus();
         int refines = 0;
         for (const auto& g : graphs) {
           ColourTable ta, tb;
           const RefineResult a = refine_lvc(g, 1, Scheme::dfc, ta);
           const RefineResult b = refine_wl1(g, tb);
           if (partition_refines(partition_of(a.colouring),
                                 partition_of(b.colouring))) {
             ++refines;
           }
         }
         CaseOutcome out;
         out.pass = refines == static_cast<int>(graphs.size());
         out.detail = std::to_string(refines) + "/" +
                      std::to_string(graphs.size()) +
                      " stable partitions refine the wl1 partition";
         return out;
       }});

  cases.push_back(
      {"biconnectivity-colour-consistency", 9,
       "random connected corpus: 100 graphs, n 3..20",
       "consistency_check at delta 1 and 2", "property-pass", "literature",
       [] {
         const auto graphs = connected_corpus();
         int checks = 0;
         std::vector<std::string> violations;
         for (std::size_t i = 0; i < graphs.size(); ++i) {
           const Graph& g1 = graphs[i];
           const Graph& g2 = graphs[(i + 1) % graphs.size()];
           for (int delta = 1; delta <= 2; ++delta) {
             ++checks;
             const ConsistencyReport rep = consistency_check(g1, g2, delta);
             for (const auto& v : rep.violations) {
               violations.push_back("pair " + std::to_string(i) + " delta " +
                                    std::to_string(delta) + ": " + v);
             }
           }
         }
         CaseOutcome out;
         out.pass = violations.empty();
         out.detail = std::to_string(violations.size()) + " violations over " +
                      std::to_string(checks) + " joint checks";
         if (!violations.empty()) out.detail += "; first: " + violations.front();
         return out;
       }});

  cases.push_back(
      {"tarjan-matches-removal-oracle", 9,
       "random connected corpus: 100 graphs, n 3..20",
       "tarjan_biconnectivity vs removal recount", "property-pass",
       "definition", [] {
         const auto graphs = connected_corpus();
         int agree = 0;
         std::string first;
         for (std::size_t i = 0; i < graphs.size(); ++i) {
           const Graph& g = graphs[i];
           const BiconnReport rep = tarjan_biconnectivity(g);
           bool ok = rep.cut_vertices == removal_cut_vertices(g) &&
                     rep.cut_edges == removal_bridges(g);
           if (ok) {
             // A vertex lies on a cycle exactly when some incident edge is
             // not a bridge.
             std::set<std::pair<int, int>> bridges(rep.cut_edges.begin(),
                                                   rep.cut_edges.end());
             std::vector<int> cyc;
             for (int v = 0; v < g.n; ++v) {
               bool on = false;
               for (int w : g.adjacency[v]) {
                 if (!bridges.count({std::min(v, w), std::max(v, w)})) {
                   on = true;
                   break;
                 }
               }
               if (on) cyc.push_back(v);
             }
             ok = rep.in_cycle == cyc;
           }
           if (ok) {
             ++agree;
           } else if (first.empty()) {
             first = "; first mismatch at graph " + std::to_string(i);
           }
         }
         CaseOutcome out;
         out.pass = agree == static_cast<int>(graphs.size());
         out.detail = std::to_string(agree) + "/" +
                      std::to_string(graphs.size()) +
                      " graphs match the removal oracle" + first;
         return out;
       }});

  cases.push_back(
      {"tie-break-partition-invariance", 10,
       "er corpus: 50 graphs, n 5..12, p in {0.3,0.5,0.7}",
       "bfc and dfc at delta=2, ascending vs 20 seeded tie orders",
       "property-pass", "literature", [] {
         const auto graphs = invariance_corpus();
         int runs = 0, matching = 0;
         std::string first;
         for (std::size_t i = 0; i < graphs.size(); ++i) {
           for (const Scheme scheme : {Scheme::bfc, Scheme::dfc}) {
             ColourTable base_table;
             const Partition base = partition_of(
                 refine_lvc(graphs[i], 2, scheme, base_table).colouring);
             for (int s = 1; s <= 20; ++s) {
               ++runs;
               ColourTable t;
               const TieBreaker tie = TieBreaker::seeded(
                   1010000ULL + 37ULL * i + static_cast<std::uint64_t>(s));
               const Partition got = partition_of(
                   refine_lvc(graphs[i], 2, scheme, t, {}, tie).colouring);
               if (got == base) {
                 ++matching;
               } else if (first.empty()) {
                 first = "; first divergence at graph " + std::to_string(i) +
                         (scheme == Scheme::bfc ? " bfc" : " dfc") + " seed " +
                         std::to_string(s);
               }
             }
           }
         }
         CaseOutcome out;
         out.pass = matching == runs;
         out.detail = std::to_string(matching) + "/" + std::to_string(runs) +
                      " seeded runs reproduce the ascending partition" + first;
         return out;
       }});

  cases.push_back(
      {"relabelling-multiset-invariance", 10,
       "er corpus: 50 graphs, n 5..12, p in {0.3,0.5,0.7}",
       "wl1, bfc delta=2, dfc delta=2, fwl2 on g vs a random relabelling",
       "not_distinguished", "definition", [] {
         const auto graphs = invariance_corpus();
         std::mt19937_64 rng(1011);
         int runs = 0, invariant = 0;
         std::string first;
         const MethodSpec methods[4] = {{MethodKind::wl1, 0},
                                        {MethodKind::bfc, 2},
                                        {MethodKind::dfc, 2},
                                        {MethodKind::fwl2, 0}};
         for (std::size_t i = 0; i < graphs.size(); ++i) {
           const Graph relabelled =
               permute(graphs[i], random_permutation(rng, graphs[i].n));
           for (const MethodSpec& m : methods) {
             ++runs;
             if (!distinguishable(graphs[i], relabelled, m).distinguished) {
               ++invariant;
             } else if (first.empty()) {
               first = "; first failure at graph " + std::to_string(i) +
                       " method " + method_label(m);
             }
           }
         }
         CaseOutcome out;
         out.pass = invariant == runs;
         out.detail = std::to_string(invariant) + "/" + std::to_string(runs) +
                      " joint runs leave the colour multiset unchanged" + first;
         return out;
       }});

  cases.push_back(
      {"espg-iso-matches-colour-equality", 11,
       "er corpus: 50 graphs, n 4..10, p 0.5",
       "bfc delta=2 stable colours vs brute_iso over espg pairs",
       "property-pass", "literature", [] {
         const auto graphs = correspondence_corpus();
         long long compared = 0, equal_not_iso = 0, iso_not_equal = 0;
         for (const Graph& g : graphs) {
           ColourTable table;
           const RefineResult r = refine_lvc(g, 2, Scheme::bfc, table);
           std::vector<Graph> egos;
           egos.reserve(g.n);
           for (int v = 0; v < g.n; ++v) egos.push_back(espg(g, v, 2).graph);
           for (int u = 0; u < g.n; ++u) {
             for (int v = u + 1; v < g.n; ++v) {
               ++compared;
               const bool eq = r.colouring[u] == r.colouring[v];
               const bool iso = brute_iso(egos[u], egos[v]);
               if (eq && !iso) ++equal_not_iso;
               if (!eq && iso) ++iso_not_equal;
             }
           }
         }
         CaseOutcome out;
         out.pass = equal_not_iso == 0 && iso_not_equal == 0;
         out.detail = "equal-colour-but-non-iso " +
                      std::to_string(equal_not_iso) +
                      ", iso-but-unequal-colour " +
                      std::to_string(iso_not_equal) + " over " +
                      std::to_string(compared) + " vertex pairs";
         return out;
       }});

  cases.push_back(
      {"spg-iso-matches-rooted-conditions", 11,
       "er corpus: 50 graphs, n 4..10, p 0.5",
       "bfc delta=2 rooted colour conditions vs brute_iso over spg pairs",
       "property-pass", "literature", [] {
         const auto graphs = correspondence_corpus();
         long long compared = 0, cond_not_iso = 0, iso_not_cond = 0;
         for (const Graph& g : graphs) {
           ColourTable table;
           const RefineResult r = refine_lvc(g, 2, Scheme::bfc, table);
           struct PairData {
             Graph spg_graph;
             int colour_uv;  // colour of u rooted at v
             int colour_vu;  // colour of v rooted at u
           };
           std::vector<PairData> pairs;
           for (int u = 0; u < g.n; ++u) {
             for (int v = u + 1; v < g.n; ++v) {
               const int lu = local_id(r.rooted[v].sub, u);
               if (lu >= r.rooted[v].sub.graph.n ||
                   r.rooted[v].sub.to_global[lu] != u) {
                 continue;  // beyond the radius
               }
               const int lv = local_id(r.rooted[u].sub, v);
               pairs.push_back({spg(g, u, v).graph,
                                r.rooted[v].colour[lu],
                                r.rooted[u].colour[lv]});
             }
           }
           for (std::size_t a = 0; a < pairs.size(); ++a) {
             for (std::size_t b = a + 1; b < pairs.size(); ++b) {
               ++compared;
               const bool cond =
                   (pairs[a].colour_uv == pairs[b].colour_uv &&
                    pairs[a].colour_vu == pairs[b].colour_vu) ||
                   (pairs[a].colour_uv == pairs[b].colour_vu &&
                    pairs[a].colour_vu == pairs[b].colour_uv);
               const bool iso = brute_iso(pairs[a].spg_graph, pairs[b].spg_graph);
               if (cond && !iso) ++cond_not_iso;
               if (!cond && iso) ++iso_not_cond;
             }
           }
         }
         CaseOutcome out;
         out.pass = cond_not_iso == 0 && iso_not_cond == 0;
         out.detail = "conditions-without-iso " + std::to_string(cond_not_iso) +
                      ", iso-without-conditions " +
                      std::to_string(iso_not_cond) + " over " +
                      std::to_string(compared) + " pair comparisons";
         return out;
       }});

  cases.push_back(
      {"rooted-distance-separation", 12,
       "er corpus: 200 graphs, n 4..12, p in {0.2,0.4,0.6}",
       "bfc delta=2 rooted colours vs root distance", "property-pass",
       "literature", [] {
         const auto graphs = mixed_corpus();
         long long slots = 0, violations = 0;
         for (const Graph& g : graphs) {
           ColourTable table;
           const RefineResult r = refine_lvc(g, 2, Scheme::bfc, table);
           std::unordered_map<int, int> dist_of_colour;
           for (const RootedColouring& rc : r.rooted) {
             for (int lu = 0; lu < rc.sub.graph.n; ++lu) {
               ++slots;
               const auto [it, fresh] =
                   dist_of_colour.try_emplace(rc.colour[lu], rc.sub.dist[lu]);
               if (!fresh && it->second != rc.sub.dist[lu]) ++violations;
             }
           }
         }
         CaseOutcome out;
         out.pass = violations == 0;
         out.detail = std::to_string(violations) +
                      " distance conflicts over " + std::to_string(slots) +
                      " rooted slots";
         return out;
       }});

  cases.push_back(
      {"colour-implies-neighbourhood-size", 12,
       "er corpus: 200 graphs, n 4..12, p in {0.2,0.4,0.6}",
       "bfc delta=2 global colours vs delta-ball size", "property-pass",
       "literature", [] {
         const auto graphs = mixed_corpus();
         long long vertices = 0, violations = 0;
         for (const Graph& g : graphs) {
           ColourTable table;
           const RefineResult r = refine_lvc(g, 2, Scheme::bfc, table);
           std::unordered_map<int, int> size_of_colour;
           for (int v = 0; v < g.n; ++v) {
             ++vertices;
             const int ball = r.rooted[v].sub.graph.n - 1;
             const auto [it, fresh] =
                 size_of_colour.try_emplace(r.colouring[v], ball);
             if (!fresh && it->second != ball) ++violations;
           }
         }
         CaseOutcome out;
         out.pass = violations == 0;
         out.detail = std::to_string(violations) +
                      " neighbourhood-size conflicts over " +
                      std::to_string(vertices) + " vertices";
         return out;
       }});

  cases.push_back(
      {"bfc2-n1000-under-10s", 13, "er: n 1000, expected average degree 6",
       "bfc delta=2 wall-clock bound", "property-pass", "computed", [] {
         std::mt19937_64 rng(1013);
         const Graph g = er_graph(rng, 1000, 6.0 / 999.0);
         ColourTable table;
         const auto start = std::chrono::steady_clock::now();
         const RefineResult r = refine_lvc(g, 2, Scheme::bfc, table);
         const double elapsed =
             std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                           start)
                 .count();
         CaseOutcome out;
         out.pass = elapsed < 10.0;
         std::ostringstream os;
         os << "n=" << g.n << " m=" << g.edge_count << " rounds=" << r.rounds
            << " classes=" << r.histogram.size() << " elapsed=" << elapsed
            << "s";
         out.detail = os.str();
         return out;
       }});

  cases.push_back(
      {"dfc-delta-witness-search", 0,
       "seeded er pairs: 60, n 5..10, p in {0.3,0.5}",
       "dfc delta vs delta+1 for delta in {1,2}", "property-pass", "computed",
       [seed] {
         std::mt19937_64 rng(seed);
         int found = 0;
         std::string first;
         for (int i = 0; i < 60; ++i) {
           const int n = 5 + (i % 6);
           const double p = (i % 2) == 0 ? 0.3 : 0.5;
           const Graph a = er_graph(rng, n, p);
           const Graph b = er_graph(rng, n, p);
           for (int d = 1; d <= 2; ++d) {
             const bool lo =
                 distinguishable(a, b, {MethodKind::dfc, d}).distinguished;
             const bool hi =
                 distinguishable(a, b, {MethodKind::dfc, d + 1}).distinguished;
             if (lo && !hi) {
               ++found;
               if (first.empty()) {
                 first = "; first: pair " + std::to_string(i) + " at delta " +
                         std::to_string(d);
               }
             }
           }
         }
         CaseOutcome out;
         out.pass = true;
         out.detail =
             (found == 0
                  ? std::string("no pair separated at delta but merged at delta+1")
                  : std::to_string(found) + " candidate pairs found" + first) +
             " over 120 checks";
         return out;
       }});

  std::sort(cases.begin(), cases.end(),
            [](const SuiteCase& a, const SuiteCase& b) { return a.name < b.name; });
  return cases;
}

SuiteReport run_suite(const std::string& filter, std::uint64_t seed) {
  SuiteReport rep;
  nlohmann::json jcases = nlohmann::json::array();
  std::ostringstream summary;
  for (SuiteCase& c : all_cases(seed)) {
    if (!filter.empty() && c.name.find(filter) == std::string::npos) continue;
    ++rep.total;
    const CaseOutcome out = c.run();
    if (!out.pass) ++rep.failed;
    jcases.push_back({{"name", c.name},
                      {"criterion", c.criterion},
                      {"generators", c.generators},
                      {"method", c.method},
                      {"expected", c.expected},
                      {"provenance", c.provenance},
                      {"pass", out.pass},
                      {"detail", out.detail}});
    summary << (out.pass ? "PASS " : "FAIL ") << c.name << " - " << out.detail
            << "\n";
  }
  rep.all_pass = rep.failed == 0;
  if (rep.total == 0) {
    summary << "no cases match filter '" << filter << "'\n";
  } else {
    summary << rep.total - rep.failed << " passed, " << rep.failed
            << " failed, " << rep.total << " run\n";
  }
  rep.summary = summary.str();
  rep.json = {{"seed", seed},
              {"filter", filter},
              {"total", rep.total},
              {"passed", rep.total - rep.failed},
              {"failed", rep.failed},
              {"all_pass", rep.all_pass},
              {"cases", std::move(jcases)}};
  return rep;
}

}  // namespace lvc
