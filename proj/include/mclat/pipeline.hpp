#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mclat/graphs.hpp"

namespace mclat {

// Outcome of one matroid -> code -> lattice run on a pair of graphs.
// Stages that exceed a cap are left unset and listed in `skipped`.
// Logical chain: tutte_equal implies wenum_equal implies theta_equal;
// a report violating it is a bug, not a result.
struct PipelineReport {
  int edge_count = 0;
  std::optional<bool> tutte_equal;
  std::optional<bool> graphs_nonisomorphic;
  std::optional<bool> wenum_equal;
  std::optional<bool> replicated_doubly_even_1;
  std::optional<bool> replicated_doubly_even_2;
  std::optional<bool> theta_equal;
  long theta_precision_quarters = 0;
  int lattice_rank = 0;  // 4 * edge_count for the replicated pair
  std::string lattice_isomorphism = "not certified";
  std::vector<std::string> skipped;
};

struct PipelineOptions {
  long theta_precision_quarters = 40;  // q^10
  int iso_cap = 10;
  int exact_cap = 24;  // max |E| for Tutte / weight-enumerator work
};

// Joins each fixture graph with the path P_n, then subdivides every
// marked edge m times. Validates |E| == 3m + 11n + 24 and rejects
// fixtures that do not produce it.
std::pair<Multigraph, Multigraph> bpr_family(const ParsedGraph& g1, const ParsedGraph& g2,
                                             int m, int n);

// Least (m, n) with 3m + 11n + 24 = d, minimizing m; nullopt when d is
// not representable.
std::optional<std::pair<int, int>> representable_d(int d);

PipelineReport run_pipeline(const Multigraph& g1, const Multigraph& g2,
                            const PipelineOptions& opts = {});

struct SearchOptions {
  bool allow_parallel = false;  // multigraph enumeration (vertex cap 5)
};

// Exhaustively enumerates connected loopless graphs up to isomorphism
// within the caps, buckets them by Tutte polynomial, and returns all
// same-bucket (hence T-equivalent, pairwise non-isomorphic) pairs.
std::vector<std::pair<Multigraph, Multigraph>> search_tequivalent(
    int max_vertices, int max_edges, const SearchOptions& opts = {});

}  // namespace mclat
