#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mclat/bigint.hpp"

namespace mclat {

// Undirected multigraph: a vertex count plus a multiset of edges. Loops
// (u == v) and parallel edges are allowed; isolated vertices are
// representable because the vertex count is stored explicitly.
// Edges are normalized to u <= v and kept sorted, so two graphs are
// equal as labeled objects iff their fields compare equal.
class Multigraph {
 public:
  using Edge = std::pair<int, int>;

  Multigraph() = default;
  Multigraph(int n_vertices, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(int u, int v) const;
  int multiplicity(int u, int v) const;
  bool has_loops() const;
  // loop contributes 2 to its endpoint's degree
  std::vector<int> degrees() const;

  Multigraph relabeled(const std::vector<int>& perm) const;
  static Multigraph disjoint_union(const Multigraph& a, const Multigraph& b);

  bool operator==(const Multigraph& o) const {
    return n_ == o.n_ && edges_ == o.edges_;
  }

  // Text format: "V <n>" then one "E <u> <v>" line per edge copy.
  // '#' starts a comment line.
  std::string to_text() const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

// A graph fixture with a list of marked edges ("M <u> <v>" lines).
struct ParsedGraph {
  Multigraph graph;
  std::vector<Multigraph::Edge> marked;
};

ParsedGraph parse_graph_text(const std::string& text);
ParsedGraph load_graph_file(const std::string& path);

// Path with n edges on n+1 vertices; n = 0 gives a single vertex.
Multigraph path_graph(int n_edges);
Multigraph complete_graph(int n);

// Disjoint union plus every edge between the two vertex sets.
Multigraph join(const Multigraph& g1, const Multigraph& g2);

// Replaces one copy of edge e by a path through `times` fresh vertices;
// times = 0 returns the graph unchanged.
Multigraph subdivide_edge(const Multigraph& g, Multigraph::Edge e, int times);

int connected_component_count(const Multigraph& g);
bool is_connected(const Multigraph& g);

// Brute-force isomorphism / automorphism counting for small graphs.
// Throws CapExceeded when a graph has more than `cap` vertices.
bool is_isomorphic(const Multigraph& g1, const Multigraph& g2, int cap = 10);
long automorphism_count(const Multigraph& g, int cap = 10);

// Cheap isomorphism invariant used to bucket candidates before running
// the exact test (vertex count, edge count, degree data, ...).
std::string iso_invariant_key(const Multigraph& g);

}  // namespace mclat
