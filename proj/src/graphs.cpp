#include "mclat/graphs.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mclat/errors.hpp"

namespace mclat {

Multigraph::Multigraph(int n_vertices, std::vector<Edge> edges)
    : n_(n_vertices), edges_(std::move(edges)) {
  if (n_ < 0) throw std::invalid_argument("Multigraph: negative vertex count");
  for (auto& [u, v] : edges_) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n_)
      throw std::invalid_argument("Multigraph: edge endpoint out of range");
  }
  std::sort(edges_.begin(), edges_.end());
}

bool Multigraph::has_edge(int u, int v) const { return multiplicity(u, v) > 0; }

int Multigraph::multiplicity(int u, int v) const {
  if (u > v) std::swap(u, v);
  Edge e{u, v};
  auto [lo, hi] = std::equal_range(edges_.begin(), edges_.end(), e);
  return int(hi - lo);
}

bool Multigraph::has_loops() const {
  for (const auto& [u, v] : edges_)
    if (u == v) return true;
  return false;
}

std::vector<int> Multigraph::degrees() const {
  std::vector<int> d(n_, 0);
  for (const auto& [u, v] : edges_) {
    d[u]++;
    d[v]++;
  }
  return d;
}

Multigraph Multigraph::relabeled(const std::vector<int>& perm) const {
  if (int(perm.size()) != n_)
    throw std::invalid_argument("relabeled: permutation has wrong length");
  std::vector<Edge> es;
  es.reserve(edges_.size());
  for (const auto& [u, v] : edges_) es.emplace_back(perm[u], perm[v]);
  return Multigraph(n_, std::move(es));
}

Multigraph Multigraph::disjoint_union(const Multigraph& a, const Multigraph& b) {
  std::vector<Edge> es = a.edges_;
  for (const auto& [u, v] : b.edges_) es.emplace_back(u + a.n_, v + a.n_);
  return Multigraph(a.n_ + b.n_, std::move(es));
}

std::string Multigraph::to_text() const {
  std::ostringstream out;
  out << "V " << n_ << "\n";
  for (const auto& [u, v] : edges_) out << "E " << u << " " << v << "\n";
  return out.str();
}

ParsedGraph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<Multigraph::Edge> edges, marked;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    auto fail = [&](const std::string& msg) {
      throw std::invalid_argument("graph text line " + std::to_string(lineno) + ": " + msg);
    };
    if (tag == "V") {
      if (n >= 0) fail("duplicate V line");
      if (!(ls >> n) || n < 0) fail("bad vertex count");
    } else if (tag == "E" || tag == "M") {
      int u, v;
      if (!(ls >> u >> v)) fail("bad edge line");
      if (n < 0) fail("edge before V line");
      (tag == "E" ? edges : marked).emplace_back(std::min(u, v), std::max(u, v));
    } else {
      fail("unknown tag '" + tag + "'");
    }
  }
  if (n < 0) throw std::invalid_argument("graph text: missing V line");
  ParsedGraph pg{Multigraph(n, std::move(edges)), std::move(marked)};
  for (const auto& [u, v] : pg.marked)
    if (!pg.graph.has_edge(u, v))
      throw std::invalid_argument("graph text: marked edge not present in graph");
  return pg;
}

ParsedGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph_text(buf.str());
}

Multigraph path_graph(int n_edges) {
  if (n_edges < 0) throw std::invalid_argument("path_graph: negative length");
  std::vector<Multigraph::Edge> es;
  for (int i = 0; i < n_edges; ++i) es.emplace_back(i, i + 1);
  return Multigraph(n_edges + 1, std::move(es));
}

Multigraph complete_graph(int n) {
  std::vector<Multigraph::Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Multigraph(n, std::move(es));
}

Multigraph join(const Multigraph& g1, const Multigraph& g2) {
  Multigraph u = Multigraph::disjoint_union(g1, g2);
  std::vector<Multigraph::Edge> es = u.edges();
  for (int a = 0; a < g1.num_vertices(); ++a)
    for (int b = 0; b < g2.num_vertices(); ++b)
      es.emplace_back(a, g1.num_vertices() + b);
  return Multigraph(u.num_vertices(), std::move(es));
}

Multigraph subdivide_edge(const Multigraph& g, Multigraph::Edge e, int times) {
  if (e.first > e.second) std::swap(e.first, e.second);
  if (times < 0) throw std::invalid_argument("subdivide_edge: negative count");
  if (!g.has_edge(e.first, e.second))
    throw std::invalid_argument("subdivide_edge: edge not present");
  if (times == 0) return g;
  std::vector<Multigraph::Edge> es = g.edges();
  es.erase(std::find(es.begin(), es.end(), e));
  int next = g.num_vertices();
  int prev = e.first;
  for (int k = 0; k < times; ++k) {
    es.emplace_back(prev, next);
    prev = next++;
  }
  es.emplace_back(prev, e.second);
  return Multigraph(next, std::move(es));
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// adjacency multiplicity matrix; a[u][u] counts loops once
std::vector<std::vector<int>> adjacency(const Multigraph& g) {
  int n = g.num_vertices();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (const auto& [u, v] : g.edges()) {
    if (u == v) {
      a[u][u]++;
    } else {
      a[u][v]++;
      a[v][u]++;
    }
  }
  return a;
}

// per-vertex (degree, loop count) used for pruning
std::vector<std::pair<int, int>> vertex_signatures(const Multigraph& g) {
  std::vector<std::pair<int, int>> sig(g.num_vertices(), {0, 0});
  for (const auto& [u, v] : g.edges()) {
    if (u == v) {
      sig[u].first += 2;
      sig[u].second += 1;
    } else {
      sig[u].first += 1;
      sig[v].first += 1;
    }
  }
  return sig;
}

// Backtracking search for vertex bijections g1 -> g2 preserving the edge
// multiset. count_all = false stops at the first match.
long match_count(const Multigraph& g1, const Multigraph& g2, bool count_all) {
  int n = g1.num_vertices();
  auto a1 = adjacency(g1), a2 = adjacency(g2);
  auto s1 = vertex_signatures(g1), s2 = vertex_signatures(g2);
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  long count = 0;
  std::function<bool(int)> rec = [&](int u) -> bool {
    if (u == n) {
      ++count;
      return !count_all;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || s1[u] != s2[w] || a1[u][u] != a2[w][w]) continue;
      bool ok = true;
      for (int p = 0; p < u && ok; ++p)
        if (a1[u][p] != a2[w][map[p]]) ok = false;
      if (!ok) continue;
      map[u] = w;
      used[w] = true;
      if (rec(u + 1)) return true;
      used[w] = false;
      map[u] = -1;
    }
    return false;
  };
  rec(0);
  return count;
}

}  // namespace

int connected_component_count(const Multigraph& g) {
  UnionFind uf(g.num_vertices());
  int comps = g.num_vertices();
  for (const auto& [u, v] : g.edges())
    if (uf.unite(u, v)) --comps;
  return comps;
}

bool is_connected(const Multigraph& g) {
  return g.num_vertices() <= 1 || connected_component_count(g) == 1;
}

bool is_isomorphic(const Multigraph& g1, const Multigraph& g2, int cap) {
  int n = std::max(g1.num_vertices(), g2.num_vertices());
  if (n > cap)
    throw CapExceeded("is_isomorphic: graph exceeds vertex cap " + std::to_string(cap));
  if (g1.num_vertices() != g2.num_vertices() || g1.num_edges() != g2.num_edges())
    return false;
  auto d1 = g1.degrees(), d2 = g2.degrees();
  std::sort(d1.begin(), d1.end());
  std::sort(d2.begin(), d2.end());
  if (d1 != d2) return false;
  return match_count(g1, g2, false) > 0;
}

long automorphism_count(const Multigraph& g, int cap) {
  if (g.num_vertices() > cap)
    throw CapExceeded("automorphism_count: graph exceeds vertex cap " + std::to_string(cap));
  return match_count(g, g, true);
}

std::string iso_invariant_key(const Multigraph& g) {
  int n = g.num_vertices();
  auto a = adjacency(g);
  auto sig = vertex_signatures(g);
  std::vector<std::string> vkeys;
  vkeys.reserve(n);
  for (int u = 0; u < n; ++u) {
    std::vector<std::pair<int, int>> nb;
    for (int v = 0; v < n; ++v)
      if (v != u && a[u][v] > 0) nb.emplace_back(sig[v].first, a[u][v]);
    std::sort(nb.begin(), nb.end());
    std::ostringstream k;
    k << sig[u].first << "." << sig[u].second << ":";
    for (auto& [d, m] : nb) k << d << "x" << m << ",";
    vkeys.push_back(k.str());
  }
  std::sort(vkeys.begin(), vkeys.end());
  std::ostringstream key;
  key << n << "|" << g.num_edges() << "|";
  for (auto& vk : vkeys) key << vk << ";";
  return key.str();
}

}  // namespace mclat
