#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "mclat/errors.hpp"
#include "mclat/json_io.hpp"
#include "mclat/matroids.hpp"
#include "mclat/pipeline.hpp"

using namespace mclat;

namespace {

ParsedGraph load_fixture(const std::string& name) {
  return load_graph_file(std::string(MCLAT_FIXTURE_DIR) + "/" + name);
}

}  // namespace

TEST_CASE("representable dimensions") {
  CHECK(representable_d(24) == std::make_pair(0, 0));
  CHECK(representable_d(35) == std::make_pair(0, 1));
  CHECK(representable_d(27) == std::make_pair(1, 0));
  CHECK_FALSE(representable_d(25).has_value());
  CHECK_FALSE(representable_d(23).has_value());

  // the set of representable d in [24, 60] matches the closed form
  std::set<int> expect = {24, 27, 30, 33, 35, 36, 38, 39, 41, 42};
  for (int d = 44; d <= 60; ++d) expect.insert(d);
  for (int d = 24; d <= 60; ++d) {
    auto mn = representable_d(d);
    CHECK(mn.has_value() == (expect.count(d) > 0));
    if (mn) CHECK(3 * mn->first + 11 * mn->second + 24 == d);
  }
}

TEST_CASE("family construction validates the edge-count formula") {
  ParsedGraph g1 = load_fixture("sample_g1.graph");
  ParsedGraph g2 = load_fixture("sample_g2.graph");
  REQUIRE(g1.marked.size() == 3);
  REQUIRE(g2.marked.size() == 3);

  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      auto [a, b] = bpr_family(g1, g2, m, n);
      CHECK(a.num_edges() == 3 * m + 11 * n + 24);
      CHECK(b.num_edges() == 3 * m + 11 * n + 24);
    }

  // a fixture with the wrong shape is rejected
  ParsedGraph bad = g1;
  bad.marked.pop_back();
  CHECK_THROWS_AS(bpr_family(bad, g2, 1, 0), std::invalid_argument);
}

TEST_CASE("tree pair runs the full chain") {
  Multigraph path = path_graph(4);
  Multigraph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  PipelineReport rep = run_pipeline(path, star);

  CHECK(rep.edge_count == 4);
  REQUIRE(rep.tutte_equal.has_value());
  CHECK(*rep.tutte_equal);
  REQUIRE(rep.graphs_nonisomorphic.has_value());
  CHECK(*rep.graphs_nonisomorphic);
  REQUIRE(rep.wenum_equal.has_value());
  CHECK(*rep.wenum_equal);
  CHECK(*rep.replicated_doubly_even_1);
  CHECK(*rep.replicated_doubly_even_2);
  REQUIRE(rep.theta_equal.has_value());
  CHECK(*rep.theta_equal);
  CHECK(rep.lattice_rank == 16);
  CHECK(rep.lattice_isomorphism == "not certified");
  CHECK(rep.skipped.empty());

  nlohmann::json j = report_to_json(rep);
  CHECK(j["edge_count"] == 4);
  CHECK(j["tutte_equal"] == true);
  CHECK(j["theta_equal_to_precision"]["equal"] == true);
  CHECK(j["lattice_isomorphism"] == "not certified");
}

TEST_CASE("identical graphs are T-equal but not non-isomorphic") {
  PipelineReport rep = run_pipeline(complete_graph(3), complete_graph(3));
  CHECK(*rep.tutte_equal);
  CHECK_FALSE(*rep.graphs_nonisomorphic);
  CHECK(*rep.wenum_equal);
  CHECK(*rep.theta_equal);
}

TEST_CASE("distinct Tutte polynomials simply report unequal") {
  PipelineReport rep = run_pipeline(complete_graph(3), path_graph(3));
  CHECK_FALSE(*rep.tutte_equal);
  CHECK(*rep.graphs_nonisomorphic);
}

TEST_CASE("search finds the tree pairs") {
  auto pairs = search_tequivalent(5, 4);
  // the bucket x^4 contains the 4-edge path, the star and the spider;
  // each pair is non-isomorphic and T-equivalent
  bool found_path_star = false;
  Multigraph path = path_graph(4);
  Multigraph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  for (const auto& [a, b] : pairs) {
    CHECK_FALSE(is_isomorphic(a, b));
    CHECK(tutte_deletion_contraction(Matroid::graphic(a)) ==
          tutte_deletion_contraction(Matroid::graphic(b)));
    bool ab = is_isomorphic(a, path) && is_isomorphic(b, star);
    bool ba = is_isomorphic(a, star) && is_isomorphic(b, path);
    if (ab || ba) found_path_star = true;
  }
  CHECK(found_path_star);

  CHECK(search_tequivalent(1, 0).empty());
}

TEST_CASE("search with parallel edges") {
  auto pairs = search_tequivalent(4, 5, {.allow_parallel = true});
  CHECK(!pairs.empty());
  for (const auto& [a, b] : pairs) {
    CHECK_FALSE(is_isomorphic(a, b));
    CHECK(tutte_deletion_contraction(Matroid::graphic(a)) ==
          tutte_deletion_contraction(Matroid::graphic(b)));
  }
  CHECK_THROWS_AS(search_tequivalent(7, 12, {.allow_parallel = true}), CapExceeded);
  CHECK_THROWS_AS(search_tequivalent(8, 4), CapExceeded);
}

TEST_CASE("the chain holds on every searched pair") {
  auto pairs = search_tequivalent(5, 6);
  CHECK(!pairs.empty());
  for (const auto& [a, b] : pairs) {
    PipelineReport rep = run_pipeline(a, b);
    CHECK(*rep.tutte_equal);
    CHECK(*rep.graphs_nonisomorphic);
    CHECK(*rep.wenum_equal);
    CHECK(*rep.replicated_doubly_even_1);
    CHECK(*rep.replicated_doubly_even_2);
    CHECK(*rep.theta_equal);
    CHECK(rep.lattice_rank == 4 * rep.edge_count);
  }
}

TEST_CASE("sample fixtures run at full scale with the iso stage capped") {
  ParsedGraph g1 = load_fixture("sample_g1.graph");
  ParsedGraph g2 = load_fixture("sample_g2.graph");
  auto [a, b] = bpr_family(g1, g2, 0, 0);
  CHECK(a.num_vertices() == 11);

  PipelineReport rep = run_pipeline(a, b);
  CHECK(rep.edge_count == 24);
  CHECK(rep.lattice_rank == 96);
  // 11 vertices exceed the default brute-force cap
  CHECK_FALSE(rep.graphs_nonisomorphic.has_value());
  CHECK(std::find(rep.skipped.begin(), rep.skipped.end(), "isomorphism") != rep.skipped.end());
  // the sample pair is not T-equivalent; the report just says so
  REQUIRE(rep.tutte_equal.has_value());
  CHECK_FALSE(*rep.tutte_equal);
  CHECK(*rep.replicated_doubly_even_1);
  CHECK(*rep.replicated_doubly_even_2);

  PipelineOptions lifted;
  lifted.iso_cap = 12;
  PipelineReport rep2 = run_pipeline(a, b, lifted);
  REQUIRE(rep2.graphs_nonisomorphic.has_value());
  CHECK(*rep2.graphs_nonisomorphic);

  // a relabeled copy of the same full-scale graph keeps every equality
  std::vector<int> perm(a.num_vertices());
  for (int i = 0; i < a.num_vertices(); ++i) perm[i] = (i + 5) % a.num_vertices();
  PipelineReport rep3 = run_pipeline(a, a.relabeled(perm), lifted);
  CHECK(*rep3.tutte_equal);
  CHECK_FALSE(*rep3.graphs_nonisomorphic);
  CHECK(*rep3.wenum_equal);
  CHECK(*rep3.theta_equal);
  CHECK(rep3.lattice_rank == 96);
}

TEST_CASE("polynomial and matrix JSON round trips") {
  ExactPoly p = ExactPoly::term1(311, 311) + ExactPoly::term1(7, 7);
  CHECK(poly_from_json(poly_to_json(p)) == p);
  CHECK(poly_from_json(nlohmann::json::array(), 2) == ExactPoly::zero(2));

  QSeries s(12);
  s.add_at(0, 1);
  s.add_at(2, 4);
  s.add_at(10, 8);
  QSeries back = qseries_from_json(qseries_to_json(s));
  CHECK(back.precision() == 12);
  CHECK(back == s);

  auto [w, cert] = admissible_matrix(3, 9);
  CHECK(weight_matrix_from_json(weight_matrix_to_json(w)) == w);
}
