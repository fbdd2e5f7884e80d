#include "lvc/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace lvc {

bool Graph::has_edge(int u, int v) const {
  const auto& a = adjacency[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count);
  for (int u = 0; u < n; ++u)
    for (int v : adjacency[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  Graph g;
  g.n = n;
  g.adjacency.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  }
  for (auto& a : g.adjacency) {
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end())
      throw std::invalid_argument("duplicate edge");
  }
  g.edge_count = static_cast<int>(edges.size());
  return g;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  auto es = g1.edges();
  es.reserve(g1.edge_count + g2.edge_count);
  for (auto [u, v] : g2.edges()) es.emplace_back(u + g1.n, v + g1.n);
  return graph_from_edges(g1.n + g2.n, es);
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return true;
  DistanceMap d = distances_from(g, 0, g.n);
  for (int v = 0; v < g.n; ++v)
    if (!d.reached(v)) return false;
  return true;
}

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

namespace {

bool parse_int_fields(const std::string& line, std::vector<long long>& out) {
  out.clear();
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    try {
      size_t used = 0;
      long long v = std::stoll(tok, &used);
      if (used != tok.size()) return false;
      out.push_back(v);
    } catch (const std::exception&) {
      return false;
    }
  }
  return true;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<long long> fields;
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  int lineno = 0;
  bool have_header = false;
  long long n = 0, m = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!parse_int_fields(line, fields))
      throw ParseError(lineno, have_header ? "malformed edge line"
                                           : "malformed header");
    if (!have_header) {
      if (fields.size() != 2 || fields[0] < 0 || fields[1] < 0)
        throw ParseError(lineno, "malformed header, expected \"n m\"");
      n = fields[0];
      m = fields[1];
      have_header = true;
      continue;
    }
    if (static_cast<long long>(edges.size()) == m)
      throw ParseError(lineno, "unexpected content after the edge list");
    if (fields.size() != 2)
      throw ParseError(lineno, "malformed edge line, expected \"u v\"");
    const long long u = fields[0], v = fields[1];
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(lineno, "vertex id out of range");
    if (u == v) throw ParseError(lineno, "self-loop");
    const std::pair<int, int> key{static_cast<int>(std::min(u, v)),
                                  static_cast<int>(std::max(u, v))};
    if (!seen.insert(key).second) throw ParseError(lineno, "duplicate edge");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (!have_header) throw ParseError(lineno + 1, "malformed header, empty input");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(lineno + 1, "expected " + std::to_string(m) +
                                     " edges, found " +
                                     std::to_string(edges.size()));
  return graph_from_edges(static_cast<int>(n), edges);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n << ' ' << g.edge_count << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

namespace {

void require_params(const std::string& family, const std::vector<int>& params,
                    size_t count) {
  if (params.size() != count)
    throw std::invalid_argument("family " + family + " expects " +
                                std::to_string(count) + " parameter(s)");
}

std::vector<std::pair<int, int>> cycle_edges(int offset, int len) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < len; ++i)
    es.emplace_back(offset + i, offset + (i + 1) % len);
  return es;
}

}  // namespace

Graph generate(const std::string& family, const std::vector<int>& params) {
  if (family == "cycle") {
    require_params(family, params, 1);
    const int n = params[0];
    if (n < 3) throw std::invalid_argument("cycle needs length at least 3");
    return graph_from_edges(n, cycle_edges(0, n));
  }
  if (family == "union_cycles") {
    require_params(family, params, 2);
    const int k = params[0], len = params[1];
    if (k < 1) throw std::invalid_argument("union_cycles needs at least 1 cycle");
    if (len < 3) throw std::invalid_argument("union_cycles needs length at least 3");
    std::vector<std::pair<int, int>> es;
    for (int c = 0; c < k; ++c) {
      auto part = cycle_edges(c * len, len);
      es.insert(es.end(), part.begin(), part.end());
    }
    return graph_from_edges(k * len, es);
  }
  if (family == "path") {
    require_params(family, params, 1);
    const int n = params[0];
    if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return graph_from_edges(n, es);
  }
  if (family == "complete") {
    require_params(family, params, 1);
    const int n = params[0];
    if (n < 1) throw std::invalid_argument("complete needs at least 1 vertex");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return graph_from_edges(n, es);
  }
  if (family == "rook4x4") {
    require_params(family, params, 0);
    // Vertex (r, c) has id 4r + c; adjacency is same row or same column.
    std::vector<std::pair<int, int>> es;
    for (int a = 0; a < 16; ++a)
      for (int b = a + 1; b < 16; ++b)
        if (a / 4 == b / 4 || a % 4 == b % 4) es.emplace_back(a, b);
    return graph_from_edges(16, es);
  }
  if (family == "shrikhande") {
    require_params(family, params, 0);
    // Cayley graph on Z4 x Z4; vertex (x, y) has id 4x + y and is adjacent
    // to (x, y) + s for s in {(1,0), (3,0), (0,1), (0,3), (1,1), (3,3)}.
    static const int kSteps[6][2] = {{1, 0}, {3, 0}, {0, 1},
                                     {0, 3}, {1, 1}, {3, 3}};
    std::set<std::pair<int, int>> es;
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y)
        for (const auto& s : kSteps) {
          const int a = 4 * x + y;
          const int b = 4 * ((x + s[0]) % 4) + (y + s[1]) % 4;
          es.insert({std::min(a, b), std::max(a, b)});
        }
    return graph_from_edges(16, {es.begin(), es.end()});
  }
  if (family == "uneven_barbell") {
    require_params(family, params, 3);
    const int a = params[0], b = params[1], p = params[2];
    if (a < 1 || b < 1)
      throw std::invalid_argument("uneven_barbell needs positive clique sizes");
    if (p < 0)
      throw std::invalid_argument("uneven_barbell needs a non-negative path length");
    // Clique A on 0..a-1 attaches at a-1; path interior a..a+p-1; clique B
    // on a+p..a+p+b-1 attaches at a+p.
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < a; ++i)
      for (int j = i + 1; j < a; ++j) es.emplace_back(i, j);
    for (int i = a + p; i < a + p + b; ++i)
      for (int j = i + 1; j < a + p + b; ++j) es.emplace_back(i, j);
    for (int i = a - 1; i < a + p; ++i) es.emplace_back(i, i + 1);
    return graph_from_edges(a + p + b, es);
  }
  throw std::invalid_argument("unknown family: " + family);
}

DistanceMap distances_from(const Graph& g, int source, int cutoff) {
  if (source < 0 || source >= g.n)
    throw std::invalid_argument("source vertex out of range");
  if (cutoff < 0) throw std::invalid_argument("cutoff must be non-negative");
  DistanceMap out;
  out.dist.assign(g.n, DistanceMap::kUnreachable);
  out.dist[source] = 0;
  std::queue<int> q;
  q.push(source);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    if (out.dist[u] == cutoff) continue;
    for (int w : g.adjacency[u])
      if (out.dist[w] == DistanceMap::kUnreachable) {
        out.dist[w] = out.dist[u] + 1;
        q.push(w);
      }
  }
  return out;
}

VertexSet neighborhood(const Graph& g, int v, int delta) {
  if (delta < 1) throw std::invalid_argument("delta must be at least 1");
  const DistanceMap d = distances_from(g, v, delta);
  VertexSet out;
  for (int u = 0; u < g.n; ++u)
    if (u != v && d.reached(u)) out.push_back(u);
  return out;
}

HopAwareSubgraph hop_subgraph(const Graph& g, int v, int delta) {
  const DistanceMap d = distances_from(g, v, delta);
  HopAwareSubgraph sub;
  for (int u = 0; u < g.n; ++u)
    if (d.reached(u)) sub.to_global.push_back(u);
  const int ln = static_cast<int>(sub.to_global.size());
  std::vector<int> to_local(g.n, -1);
  for (int i = 0; i < ln; ++i) to_local[sub.to_global[i]] = i;
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < ln; ++i)
    for (int w : g.adjacency[sub.to_global[i]]) {
      const int j = to_local[w];
      if (j > i) es.emplace_back(i, j);
    }
  sub.graph = graph_from_edges(ln, es);
  sub.root_local = to_local[v];
  sub.dist.dist.resize(ln);
  for (int i = 0; i < ln; ++i) sub.dist.dist[i] = d[sub.to_global[i]];
  return sub;
}

bool brute_iso(const Graph& g1, const Graph& g2) {
  constexpr int kCap = 10;
  if (g1.n > kCap || g2.n > kCap)
    throw std::invalid_argument("brute_iso is limited to graphs of at most 10 vertices");
  if (g1.n != g2.n || g1.edge_count != g2.edge_count) return false;
  const int n = g1.n;
  std::vector<int> ds1(n), ds2(n);
  for (int v = 0; v < n; ++v) {
    ds1[v] = g1.degree(v);
    ds2[v] = g2.degree(v);
  }
  auto sorted1 = ds1, sorted2 = ds2;
  std::sort(sorted1.begin(), sorted1.end());
  std::sort(sorted2.begin(), sorted2.end());
  if (sorted1 != sorted2) return false;

  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  auto extend = [&](auto&& self, int k) -> bool {
    if (k == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || ds2[w] != ds1[k]) continue;
      bool ok = true;
      for (int i = 0; i < k && ok; ++i)
        ok = g1.has_edge(k, i) == g2.has_edge(w, map[i]);
      if (!ok) continue;
      map[k] = w;
      used[w] = 1;
      if (self(self, k + 1)) return true;
      used[w] = 0;
      map[k] = -1;
    }
    return false;
  };
  return extend(extend, 0);
}

Graph permute(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.n)
    throw std::invalid_argument("permutation size does not match vertex count");
  std::vector<char> seen(g.n, 0);
  for (int p : perm) {
    if (p < 0 || p >= g.n || seen[p])
      throw std::invalid_argument("permutation is not a bijection");
    seen[p] = 1;
  }
  std::vector<std::pair<int, int>> es;
  es.reserve(g.edge_count);
  for (auto [u, v] : g.edges()) es.emplace_back(perm[u], perm[v]);
  return graph_from_edges(g.n, es);
}

}  // namespace lvc
