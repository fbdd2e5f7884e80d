#include "lvc/refine.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace lvc {

std::size_t ColourTable::Hash::operator()(const Signature& s) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::int32_t v : s) {
    std::uint32_t u = static_cast<std::uint32_t>(v);
    for (int b = 0; b < 4; ++b) {
      h ^= (u >> (8 * b)) & 0xffu;
      h *= 1099511628211ULL;
    }
  }
  return static_cast<std::size_t>(h);
}

int ColourTable::intern(const Signature& sig) {
  auto [it, inserted] = ids_.try_emplace(sig, static_cast<int>(ids_.size()));
  (void)inserted;
  return it->second;
}

int worker_count(int jobs) {
  if (jobs <= 1) return 1;
  int limit = static_cast<int>(std::thread::hardware_concurrency());
  if (limit < 1) limit = 1;
  if (const char* env = std::getenv("LVC_THREADS")) {
    const int requested = std::atoi(env);
    if (requested >= 1) limit = requested;
  }
  return std::min(limit, jobs);
}

void parallel_for(int jobs, const std::function<void(int)>& fn) {
  const int workers = worker_count(jobs);
  if (workers <= 1) {
    for (int i = 0; i < jobs; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&]() {
    while (true) {
      const int i = next.fetch_add(1);
      if (i >= jobs || failed.load()) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

Partition partition_of(const Colouring& colouring) {
  std::unordered_map<int, std::vector<int>> cells;
  for (int u = 0; u < static_cast<int>(colouring.size()); ++u) {
    cells[colouring[u]].push_back(u);
  }
  Partition p;
  p.cells.reserve(cells.size());
  for (auto& [colour, members] : cells) p.cells.push_back(std::move(members));
  std::sort(p.cells.begin(), p.cells.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return p;
}

bool partition_refines(const Partition& fine, const Partition& coarse) {
  std::vector<int> dom_fine, dom_coarse;
  for (const auto& cell : fine.cells) {
    dom_fine.insert(dom_fine.end(), cell.begin(), cell.end());
  }
  for (const auto& cell : coarse.cells) {
    dom_coarse.insert(dom_coarse.end(), cell.begin(), cell.end());
  }
  std::sort(dom_fine.begin(), dom_fine.end());
  std::sort(dom_coarse.begin(), dom_coarse.end());
  if (dom_fine != dom_coarse) {
    throw std::invalid_argument("partition_refines: partition domains differ");
  }
  std::unordered_map<int, int> coarse_cell;
  for (int c = 0; c < static_cast<int>(coarse.cells.size()); ++c) {
    for (int u : coarse.cells[c]) coarse_cell[u] = c;
  }
  for (const auto& cell : fine.cells) {
    const int home = coarse_cell.at(cell.front());
    for (int u : cell) {
      if (coarse_cell.at(u) != home) return false;
    }
  }
  return true;
}

Histogram histogram_of(const Colouring& colouring) {
  std::unordered_map<int, int> counts;
  for (int c : colouring) ++counts[c];
  Histogram h(counts.begin(), counts.end());
  std::sort(h.begin(), h.end());
  return h;
}

std::string MethodSpec::name() const {
  switch (kind) {
    case MethodKind::wl1:
      return "wl1";
    case MethodKind::bfc:
      return "bfc";
    case MethodKind::dfc:
      return "dfc";
    case MethodKind::fwl2:
      return "fwl2";
  }
  return "unknown";
}

namespace {

// Canonical renumbering by first occurrence, so snapshots compare equal
// exactly when the induced partitions match even though shared-table ids
// grow every round.
void append_canonical(std::vector<int>& snap, const std::vector<int>& colours,
                      std::unordered_map<int, int>& canon) {
  for (int c : colours) {
    auto [it, fresh] = canon.try_emplace(c, static_cast<int>(canon.size()));
    (void)fresh;
    snap.push_back(it->second);
  }
}

Signature multiset_signature(std::int32_t tag, int prev,
                             std::vector<int>&& members) {
  std::sort(members.begin(), members.end());
  Signature s;
  s.reserve(2 + members.size());
  s.push_back(tag);
  s.push_back(prev);
  for (int c : members) s.push_back(c);
  return s;
}

}  // namespace

RefineResult refine_lvc(const Graph& g, int delta, Scheme scheme,
                        ColourTable& table, const Colouring& init,
                        const TieBreaker& tie) {
  if (delta < 1) {
    throw std::invalid_argument("refine_lvc: delta must be at least 1");
  }
  if (!init.empty() && static_cast<int>(init.size()) != g.n) {
    throw std::invalid_argument("refine_lvc: init must have one label per vertex");
  }
  const int n = g.n;
  RefineResult res;
  res.rooted.resize(n);
  std::vector<std::vector<std::vector<int>>> eta(n);
  parallel_for(n, [&](int v) {
    RootedColouring& rc = res.rooted[v];
    rc.sub = hop_subgraph(g, v, delta);
    rc.tree = scheme == Scheme::bfc ? bfs_tree(rc.sub, tie)
                                    : dfs_tree(rc.sub, tie);
    const int nv = rc.sub.graph.n;
    eta[v].resize(nv);
    for (int u = 0; u < nv; ++u) {
      if (u == rc.tree.root) continue;
      eta[v][u] = scheme == Scheme::bfc ? eta_bfc(rc.sub, rc.tree, u)
                                        : eta_dfc(rc.sub, rc.tree, u);
    }
  });

  // occurs[u] lists the rooted slots of u in every ball centred elsewhere;
  // those slots feed u's global update.
  std::vector<std::vector<std::pair<int, int>>> occurs(n);
  for (int v = 0; v < n; ++v) {
    const auto& to_global = res.rooted[v].sub.to_global;
    for (int lu = 0; lu < static_cast<int>(to_global.size()); ++lu) {
      if (to_global[lu] != v) occurs[to_global[lu]].emplace_back(v, lu);
    }
  }

  Colouring global(n);
  for (int u = 0; u < n; ++u) {
    global[u] = table.intern({kTagInit, init.empty() ? 0 : init[u]});
  }
  std::int64_t positions = n;
  for (int v = 0; v < n; ++v) {
    auto& rc = res.rooted[v];
    rc.colour.resize(rc.sub.graph.n);
    for (int lu = 0; lu < rc.sub.graph.n; ++lu) {
      rc.colour[lu] = global[rc.sub.to_global[lu]];
    }
    positions += rc.sub.graph.n;
  }
  const int cap = static_cast<int>(positions) + 1;

  auto snapshot = [&]() {
    std::vector<int> snap;
    snap.reserve(static_cast<std::size_t>(positions));
    std::unordered_map<int, int> canon;
    append_canonical(snap, global, canon);
    for (int v = 0; v < n; ++v) append_canonical(snap, res.rooted[v].colour, canon);
    return snap;
  };

  res.class_counts.push_back(static_cast<int>(histogram_of(global).size()));
  std::vector<int> prev_snap = snapshot();

  while (true) {
    if (res.rounds >= cap) {
      throw std::runtime_error("refine_lvc: internal error, partition did not stabilize");
    }
    // Rooted update: every input is a round-l value, so signatures can be
    // staged in parallel and interned afterwards in (root, vertex) order.
    std::vector<std::vector<Signature>> staged(n);
    parallel_for(n, [&](int v) {
      const auto& rc = res.rooted[v];
      const int nv = rc.sub.graph.n;
      staged[v].resize(nv);
      for (int lu = 0; lu < nv; ++lu) {
        if (lu == rc.tree.root) continue;
        std::vector<int> members;
        members.reserve(eta[v][lu].size());
        for (int w : eta[v][lu]) members.push_back(rc.colour[w]);
        staged[v][lu] = multiset_signature(
            kTagRooted, global[rc.sub.to_global[lu]], std::move(members));
      }
    });
    std::vector<Colouring> rooted_new(n);
    for (int v = 0; v < n; ++v) {
      const int nv = res.rooted[v].sub.graph.n;
      rooted_new[v].resize(nv);
      for (int lu = 0; lu < nv; ++lu) {
        if (lu == res.rooted[v].tree.root) continue;
        rooted_new[v][lu] = table.intern(staged[v][lu]);
      }
    }
    // Global update: aggregate the fresh rooted colours of u over every ball
    // containing it, then pin each root to its new global colour.
    std::vector<Signature> gsig(n);
    parallel_for(n, [&](int u) {
      std::vector<int> members;
      members.reserve(occurs[u].size());
      for (auto [v, lu] : occurs[u]) members.push_back(rooted_new[v][lu]);
      gsig[u] = multiset_signature(kTagGlobal, global[u], std::move(members));
    });
    Colouring global_new(n);
    for (int u = 0; u < n; ++u) global_new[u] = table.intern(gsig[u]);
    for (int v = 0; v < n; ++v) {
      rooted_new[v][res.rooted[v].tree.root] = global_new[v];
    }

    global = std::move(global_new);
    for (int v = 0; v < n; ++v) res.rooted[v].colour = std::move(rooted_new[v]);
    ++res.rounds;
    res.class_counts.push_back(static_cast<int>(histogram_of(global).size()));
    std::vector<int> snap = snapshot();
    if (snap == prev_snap) break;
    prev_snap = std::move(snap);
  }

  res.colouring = std::move(global);
  res.histogram = histogram_of(res.colouring);
  return res;
}

RefineResult refine_wl1(const Graph& g, ColourTable& table,
                        const Colouring& init) {
  if (!init.empty() && static_cast<int>(init.size()) != g.n) {
    throw std::invalid_argument("refine_wl1: init must have one label per vertex");
  }
  const int n = g.n;
  RefineResult res;
  Colouring colour(n);
  for (int u = 0; u < n; ++u) {
    colour[u] = table.intern({kTagInit, init.empty() ? 0 : init[u]});
  }
  const int cap = n + 1;
  auto snapshot = [&]() {
    std::vector<int> snap;
    std::unordered_map<int, int> canon;
    append_canonical(snap, colour, canon);
    return snap;
  };
  res.class_counts.push_back(static_cast<int>(histogram_of(colour).size()));
  std::vector<int> prev_snap = snapshot();
  while (true) {
    if (res.rounds >= cap) {
      throw std::runtime_error("refine_wl1: internal error, partition did not stabilize");
    }
    std::vector<Signature> staged(n);
    parallel_for(n, [&](int u) {
      std::vector<int> members;
      members.reserve(g.adjacency[u].size());
      for (int w : g.adjacency[u]) members.push_back(colour[w]);
      staged[u] = multiset_signature(kTagWl1, colour[u], std::move(members));
    });
    for (int u = 0; u < n; ++u) colour[u] = table.intern(staged[u]);
    ++res.rounds;
    res.class_counts.push_back(static_cast<int>(histogram_of(colour).size()));
    std::vector<int> snap = snapshot();
    if (snap == prev_snap) break;
    prev_snap = std::move(snap);
  }
  res.colouring = std::move(colour);
  res.histogram = histogram_of(res.colouring);
  return res;
}

namespace {

// Pair refinement over one or more graphs against a shared table. Stability
// is read jointly so lockstep comparisons stop at the same round.
struct Fwl2Run {
  std::vector<Colouring> colour;  // per graph, row-major pair colours
  int rounds = 0;
  std::vector<int> class_counts;
};

Fwl2Run fwl2_run(const std::vector<const Graph*>& graphs, ColourTable& table) {
  const int k = static_cast<int>(graphs.size());
  Fwl2Run run;
  run.colour.resize(k);
  std::int64_t positions = 0;
  for (int gidx = 0; gidx < k; ++gidx) {
    const Graph& g = *graphs[gidx];
    auto& colour = run.colour[gidx];
    colour.resize(static_cast<std::size_t>(g.n) * g.n);
    for (int u = 0; u < g.n; ++u) {
      for (int v = 0; v < g.n; ++v) {
        const std::int32_t cls = u == v ? 0 : (g.has_edge(u, v) ? 1 : 2);
        colour[static_cast<std::size_t>(u) * g.n + v] =
            table.intern({kTagPairInit, cls});
      }
    }
    positions += static_cast<std::int64_t>(g.n) * g.n;
  }
  const int cap = static_cast<int>(positions) + 1;

  auto snapshot = [&]() {
    std::vector<int> snap;
    snap.reserve(static_cast<std::size_t>(positions));
    std::unordered_map<int, int> canon;
    for (const auto& colour : run.colour) append_canonical(snap, colour, canon);
    return snap;
  };
  auto distinct = [&]() {
    std::vector<int> all;
    for (const auto& colour : run.colour) {
      all.insert(all.end(), colour.begin(), colour.end());
    }
    return static_cast<int>(histogram_of(all).size());
  };

  run.class_counts.push_back(distinct());
  std::vector<int> prev_snap = snapshot();
  while (true) {
    if (run.rounds >= cap) {
      throw std::runtime_error("refine_fwl2: internal error, partition did not stabilize");
    }
    std::vector<std::vector<Signature>> staged(k);
    for (int gidx = 0; gidx < k; ++gidx) {
      const Graph& g = *graphs[gidx];
      const auto& colour = run.colour[gidx];
      auto& sigs = staged[gidx];
      sigs.resize(colour.size());
      parallel_for(g.n, [&](int u) {
        for (int v = 0; v < g.n; ++v) {
          // Pivot pairs (colour(u,w), colour(w,v)) sorted lexicographically.
          std::vector<std::pair<int, int>> pivots;
          pivots.reserve(g.n);
          for (int w = 0; w < g.n; ++w) {
            pivots.emplace_back(colour[static_cast<std::size_t>(u) * g.n + w],
                                colour[static_cast<std::size_t>(w) * g.n + v]);
          }
          std::sort(pivots.begin(), pivots.end());
          Signature s;
          s.reserve(2 + 2 * pivots.size());
          s.push_back(kTagPair);
          s.push_back(colour[static_cast<std::size_t>(u) * g.n + v]);
          for (const auto& [a, b] : pivots) {
            s.push_back(a);
            s.push_back(b);
          }
          sigs[static_cast<std::size_t>(u) * g.n + v] = std::move(s);
        }
      });
    }
    for (int gidx = 0; gidx < k; ++gidx) {
      auto& colour = run.colour[gidx];
      for (std::size_t p = 0; p < colour.size(); ++p) {
        colour[p] = table.intern(staged[gidx][p]);
      }
    }
    ++run.rounds;
    run.class_counts.push_back(distinct());
    std::vector<int> snap = snapshot();
    if (snap == prev_snap) break;
    prev_snap = std::move(snap);
  }
  return run;
}

}  // namespace

RefineResult refine_fwl2(const Graph& g, ColourTable& table) {
  Fwl2Run run = fwl2_run({&g}, table);
  RefineResult res;
  res.colouring = std::move(run.colour[0]);
  res.rounds = run.rounds;
  res.class_counts = std::move(run.class_counts);
  res.histogram = histogram_of(res.colouring);
  return res;
}

CompareReport distinguishable(const Graph& g1, const Graph& g2,
                              const MethodSpec& method,
                              const TieBreaker& tie) {
  ColourTable table;
  CompareReport rep;
  if (method.kind == MethodKind::fwl2) {
    Fwl2Run run = fwl2_run({&g1, &g2}, table);
    rep.rounds = run.rounds;
    rep.histogram1 = histogram_of(run.colour[0]);
    rep.histogram2 = histogram_of(run.colour[1]);
  } else {
    const Graph joint = disjoint_union(g1, g2);
    RefineResult r;
    if (method.kind == MethodKind::wl1) {
      r = refine_wl1(joint, table);
    } else {
      const Scheme scheme =
          method.kind == MethodKind::bfc ? Scheme::bfc : Scheme::dfc;
      r = refine_lvc(joint, method.delta, scheme, table, {}, tie);
    }
    rep.rounds = r.rounds;
    rep.histogram1 = histogram_of(
        Colouring(r.colouring.begin(), r.colouring.begin() + g1.n));
    rep.histogram2 = histogram_of(
        Colouring(r.colouring.begin() + g1.n, r.colouring.end()));
  }
  rep.distinguished = rep.histogram1 != rep.histogram2;
  return rep;
}

}  // namespace lvc
