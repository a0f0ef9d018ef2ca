#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "mclat/errors.hpp"
#include "mclat/graphs.hpp"

using namespace mclat;

namespace {

Multigraph random_graph(std::mt19937_64& rng, int max_v, int max_e, bool loops = false) {
  std::uniform_int_distribution<int> nv(1, max_v);
  int n = nv(rng);
  std::uniform_int_distribution<int> ne(0, max_e), vx(0, n - 1);
  std::vector<Multigraph::Edge> es;
  int m = ne(rng);
  for (int i = 0; i < m; ++i) {
    int u = vx(rng), v = vx(rng);
    if (!loops && u == v) continue;
    es.emplace_back(u, v);
  }
  return Multigraph(n, std::move(es));
}

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("path graphs") {
  CHECK(path_graph(0).num_vertices() == 1);
  CHECK(path_graph(0).num_edges() == 0);
  CHECK(path_graph(1).num_vertices() == 2);
  CHECK(path_graph(1).num_edges() == 1);
  Multigraph p3 = path_graph(3);
  CHECK(p3.num_vertices() == 4);
  CHECK(p3.edges() == std::vector<Multigraph::Edge>{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("join: K2, K4 and the edge-count formula") {
  Multigraph k1(1, {});
  CHECK(is_isomorphic(join(k1, k1), complete_graph(2)));
  CHECK(is_isomorphic(join(path_graph(1), path_graph(1)), complete_graph(4)));

  std::mt19937_64 rng(101);
  for (int round = 0; round < 30; ++round) {
    Multigraph g = random_graph(rng, 5, 6);
    int n = int(rng() % 4);
    Multigraph j = join(g, path_graph(n));
    CHECK(j.num_edges() == g.num_edges() + n + g.num_vertices() * (n + 1));
    CHECK(j.num_vertices() == g.num_vertices() + n + 1);
  }
}

TEST_CASE("join is symmetric up to isomorphism") {
  std::mt19937_64 rng(202);
  for (int round = 0; round < 20; ++round) {
    Multigraph a = random_graph(rng, 4, 4);
    Multigraph b = random_graph(rng, 4, 4);
    if (a.num_vertices() + b.num_vertices() > 8) continue;
    CHECK(is_isomorphic(join(a, b), join(b, a)));
  }
}

TEST_CASE("subdivision") {
  // one subdivision of K2's edge gives the path with 2 edges
  Multigraph k2 = complete_graph(2);
  CHECK(is_isomorphic(subdivide_edge(k2, {0, 1}, 1), path_graph(2)));

  CHECK(subdivide_edge(k2, {0, 1}, 0) == k2);

  // subdividing one edge of a digon gives a triangle
  Multigraph digon(2, {{0, 1}, {0, 1}});
  CHECK(is_isomorphic(subdivide_edge(digon, {0, 1}, 1), complete_graph(3)));

  CHECK_THROWS_AS(subdivide_edge(k2, {0, 0}, 1), std::invalid_argument);

  std::mt19937_64 rng(303);
  for (int round = 0; round < 20; ++round) {
    Multigraph g = random_graph(rng, 5, 6);
    if (g.num_edges() == 0) continue;
    auto e = g.edges()[rng() % g.num_edges()];
    int t = int(rng() % 4);
    Multigraph s = subdivide_edge(g, e, t);
    CHECK(s.num_edges() == g.num_edges() + t);
    CHECK(s.num_vertices() == g.num_vertices() + t);
  }
}

TEST_CASE("isomorphism basics") {
  Multigraph p3 = path_graph(3);
  Multigraph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK_FALSE(is_isomorphic(p3, star));

  std::mt19937_64 rng(404);
  for (int round = 0; round < 20; ++round) {
    Multigraph g = random_graph(rng, 6, 8, true);
    std::vector<int> perm(g.num_vertices());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(is_isomorphic(g, g.relabeled(perm)));
  }

  Multigraph digon(2, {{0, 1}, {0, 1}});
  Multigraph two_edges(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(is_isomorphic(digon, two_edges));
}

TEST_CASE("isomorphism is an equivalence relation on a random pool") {
  std::mt19937_64 rng(505);
  std::vector<Multigraph> pool;
  for (int i = 0; i < 12; ++i) pool.push_back(random_graph(rng, 4, 5));
  for (const auto& a : pool) CHECK(is_isomorphic(a, a));
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j)
      CHECK(is_isomorphic(pool[i], pool[j]) == is_isomorphic(pool[j], pool[i]));
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = 0; j < pool.size(); ++j)
      for (std::size_t k = 0; k < pool.size(); ++k)
        if (is_isomorphic(pool[i], pool[j]) && is_isomorphic(pool[j], pool[k]))
          CHECK(is_isomorphic(pool[i], pool[k]));
}

TEST_CASE("automorphism counts") {
  CHECK(automorphism_count(complete_graph(3)) == 6);
  CHECK(automorphism_count(complete_graph(2)) == 2);
  CHECK(automorphism_count(path_graph(2)) == 2);
  CHECK(automorphism_count(Multigraph(0, {})) == 1);
  // parallel edges count through vertex permutations only
  CHECK(automorphism_count(Multigraph(2, {{0, 1}, {0, 1}})) == 2);

  std::mt19937_64 rng(606);
  for (int round = 0; round < 25; ++round) {
    Multigraph g = random_graph(rng, 5, 6, true);
    long aut = automorphism_count(g);
    CHECK(factorial(g.num_vertices()) % aut == 0);
  }
}

TEST_CASE("vertex cap raises CapExceeded") {
  Multigraph big(11, {});
  CHECK_THROWS_AS(is_isomorphic(big, big), CapExceeded);
  CHECK_THROWS_AS(automorphism_count(big), CapExceeded);
  CHECK(is_isomorphic(big, big, 12));
}

TEST_CASE("graph text round trip") {
  Multigraph g(4, {{0, 1}, {0, 1}, {2, 2}});
  ParsedGraph pg = parse_graph_text(g.to_text());
  CHECK(pg.graph == g);
  CHECK(pg.marked.empty());

  auto with_marked = parse_graph_text("# fixture\nV 3\nE 0 1\nE 1 2\nM 1 2\n");
  CHECK(with_marked.graph.num_edges() == 2);
  CHECK(with_marked.marked == std::vector<Multigraph::Edge>{{1, 2}});

  CHECK_THROWS_AS(parse_graph_text("E 0 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_text("V 2\nE 0 5\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_text("V 2\nE 0 1\nM 1 1\n"), std::invalid_argument);
}
