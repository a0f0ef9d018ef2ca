#include "mclat/pipeline.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "mclat/codes.hpp"
#include "mclat/errors.hpp"
#include "mclat/lattices.hpp"
#include "mclat/matroids.hpp"

namespace mclat {

std::pair<Multigraph, Multigraph> bpr_family(const ParsedGraph& g1, const ParsedGraph& g2,
                                             int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("bpr_family: m, n must be >= 0");
  auto build = [&](const ParsedGraph& pg, const char* which) {
    Multigraph g = join(pg.graph, path_graph(n));
    // marked edges live in the fixture graph proper, so their endpoints
    // are unchanged by the join
    for (const auto& e : pg.marked) g = subdivide_edge(g, e, m);
    int expect = 3 * m + 11 * n + 24;
    if (g.num_edges() != expect)
      throw std::invalid_argument(std::string("bpr_family: ") + which + " has " +
                                  std::to_string(g.num_edges()) + " edges, expected " +
                                  std::to_string(expect) +
                                  " (wrong fixture or marked edges)");
    return g;
  };
  return {build(g1, "g1"), build(g2, "g2")};
}

std::optional<std::pair<int, int>> representable_d(int d) {
  int r = d - 24;
  if (r < 0) return std::nullopt;
  for (int n = r / 11; n >= 0; --n) {
    int rem = r - 11 * n;
    if (rem % 3 == 0) return std::make_pair(rem / 3, n);
  }
  return std::nullopt;
}

PipelineReport run_pipeline(const Multigraph& g1, const Multigraph& g2,
                            const PipelineOptions& opts) {
  PipelineReport rep;
  rep.edge_count = g1.num_edges();
  rep.theta_precision_quarters = opts.theta_precision_quarters;
  rep.lattice_rank = 4 * rep.edge_count;

  bool exact_ok = g1.num_edges() <= opts.exact_cap && g2.num_edges() <= opts.exact_cap;

  if (exact_ok) {
    ExactPoly t1 = tutte_deletion_contraction(Matroid::graphic(g1));
    ExactPoly t2 = tutte_deletion_contraction(Matroid::graphic(g2));
    if (t1 != tutte_subset_expansion(Matroid::graphic(g1), opts.exact_cap) ||
        t2 != tutte_subset_expansion(Matroid::graphic(g2), opts.exact_cap))
      throw std::logic_error("run_pipeline: Tutte algorithms disagree");
    rep.tutte_equal = (t1 == t2);
  } else {
    rep.skipped.push_back("tutte");
  }

  try {
    rep.graphs_nonisomorphic = !is_isomorphic(g1, g2, opts.iso_cap);
  } catch (const CapExceeded&) {
    rep.skipped.push_back("isomorphism");
  }

  BinaryCode c1 = code_from_matroid(incidence_matroid(g1));
  BinaryCode c2 = code_from_matroid(incidence_matroid(g2));

  if (exact_ok && c1.dim() <= 24 && c2.dim() <= 24) {
    ExactPoly w1 = weight_enumerator_enum(c1);
    ExactPoly w2 = weight_enumerator_enum(c2);
    if (w1 != weight_enumerator_greene(incidence_matroid(g1), opts.exact_cap) ||
        w2 != weight_enumerator_greene(incidence_matroid(g2), opts.exact_cap))
      throw std::logic_error("run_pipeline: weight-enumerator algorithms disagree");
    rep.wenum_equal = (w1 == w2);
  } else {
    rep.skipped.push_back("wenum");
  }

  BinaryCode r1 = c1.replicate4();
  BinaryCode r2 = c2.replicate4();
  rep.replicated_doubly_even_1 = r1.is_doubly_even();
  rep.replicated_doubly_even_2 = r2.is_doubly_even();

  if (r1.dim() <= 24 && r2.dim() <= 24) {
    QSeries th1 = theta_from_code(r1, opts.theta_precision_quarters);
    QSeries th2 = theta_from_code(r2, opts.theta_precision_quarters);
    rep.theta_equal = (th1 == th2);
  } else {
    rep.skipped.push_back("theta");
  }

  // chain tripwire: T equal forces enumerator equality forces theta
  // equality
  if (rep.tutte_equal.value_or(false) && rep.wenum_equal && !*rep.wenum_equal)
    throw std::logic_error("run_pipeline: tutte_equal but wenum differs");
  if (rep.wenum_equal.value_or(false) && rep.theta_equal && !*rep.theta_equal)
    throw std::logic_error("run_pipeline: wenum_equal but theta differs");

  return rep;
}

namespace {

struct RepEntry {
  Multigraph graph;
  std::string tutte_key;
};

}  // namespace

std::vector<std::pair<Multigraph, Multigraph>> search_tequivalent(int max_vertices,
                                                                  int max_edges,
                                                                  const SearchOptions& opts) {
  if (max_vertices > 7 || max_edges > 12)
    throw CapExceeded("search_tequivalent: caps are 7 vertices / 12 edges");
  if (opts.allow_parallel && max_vertices > 5)
    throw CapExceeded("search_tequivalent: parallel-edge search capped at 5 vertices");

  std::vector<RepEntry> reps;
  std::map<std::string, std::vector<std::size_t>> buckets;  // invariant -> rep indices

  auto consider = [&](const Multigraph& g) {
    if (!is_connected(g)) return;
    std::string key = iso_invariant_key(g);
    auto& bucket = buckets[key];
    for (std::size_t idx : bucket)
      if (is_isomorphic(reps[idx].graph, g, max_vertices)) return;
    bucket.push_back(reps.size());
    reps.push_back({g, tutte_deletion_contraction(Matroid::graphic(g)).to_string()});
  };

  for (int n = 1; n <= max_vertices; ++n) {
    std::vector<Multigraph::Edge> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    // connected graphs on n labeled vertices need at least n-1 edges
    int min_edges = n - 1;
    std::vector<Multigraph::Edge> chosen;
    std::function<void(std::size_t, int)> rec = [&](std::size_t slot, int budget) {
      if (slot == pairs.size()) {
        if (int(chosen.size()) >= min_edges) consider(Multigraph(n, chosen));
        return;
      }
      rec(slot + 1, budget);  // multiplicity 0
      int max_mult = opts.allow_parallel ? budget : std::min(budget, 1);
      std::size_t base = chosen.size();
      for (int mult = 1; mult <= max_mult; ++mult) {
        chosen.push_back(pairs[slot]);
        rec(slot + 1, budget - mult);
      }
      chosen.resize(base);
    };
    rec(0, max_edges);
  }

  // bucket by Tutte polynomial; same-bucket representatives are distinct
  // isomorphism classes by construction
  std::map<std::string, std::vector<std::size_t>> by_tutte;
  for (std::size_t i = 0; i < reps.size(); ++i) by_tutte[reps[i].tutte_key].push_back(i);

  std::vector<std::pair<Multigraph, Multigraph>> out;
  for (const auto& [key, idxs] : by_tutte)
    for (std::size_t a = 0; a < idxs.size(); ++a)
      for (std::size_t b = a + 1; b < idxs.size(); ++b)
        out.emplace_back(reps[idxs[a]].graph, reps[idxs[b]].graph);
  return out;
}

}  // namespace mclat
