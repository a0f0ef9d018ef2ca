#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <numeric>
#include <random>

#include "mclat/errors.hpp"
#include "mclat/matroids.hpp"

using namespace mclat;

namespace {

Multigraph random_graph(std::mt19937_64& rng, int max_v, int max_e, bool loops = true) {
  int n = 1 + int(rng() % max_v);
  std::vector<Multigraph::Edge> es;
  int m = int(rng() % (max_e + 1));
  for (int i = 0; i < m; ++i) {
    int u = int(rng() % n), v = int(rng() % n);
    if (!loops && u == v) continue;
    es.emplace_back(u, v);
  }
  return Multigraph(n, std::move(es));
}

F2Matrix random_matrix(std::mt19937_64& rng, int max_r, int max_c) {
  int r = 1 + int(rng() % max_r), c = 1 + int(rng() % max_c);
  F2Matrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      if (rng() & 1u) m.set(i, j, true);
  return m;
}

// direct basis counter: subsets with |A| = rank(A) = rank(E)
Int count_bases(const Matroid& m) {
  int full = m.full_rank();
  Int count = 0;
  for (std::uint32_t mask = 0; mask < (1u << m.ground_size()); ++mask)
    if (std::popcount(mask) == full && m.rank(mask) == full) ++count;
  return count;
}

std::vector<Matroid> test_pool(std::mt19937_64& rng) {
  std::vector<Matroid> pool;
  pool.push_back(Matroid::graphic(complete_graph(3)));
  pool.push_back(Matroid::graphic(complete_graph(4)));
  pool.push_back(Matroid::graphic(path_graph(4)));
  pool.push_back(Matroid::graphic(Multigraph(2, {{0, 1}, {0, 1}})));
  pool.push_back(Matroid::graphic(Multigraph(1, {{0, 0}})));
  F2Matrix u12(1, 2);
  u12.set(0, 0, true);
  u12.set(0, 1, true);
  pool.push_back(Matroid::vector_f2(u12));
  for (int i = 0; i < 10; ++i) pool.push_back(Matroid::vector_f2(random_matrix(rng, 5, 10)));
  for (int i = 0; i < 10; ++i) {
    Multigraph g = random_graph(rng, 5, 9);
    pool.push_back(Matroid::graphic(g));
    pool.push_back(incidence_matroid(g));
  }
  return pool;
}

}  // namespace

TEST_CASE("graphic matroid ranks") {
  Matroid k3 = Matroid::graphic(complete_graph(3));
  CHECK(k3.full_rank() == 2);
  CHECK(k3.rank(0b111) == 2);
  for (std::uint32_t two : {0b011u, 0b101u, 0b110u}) CHECK(k3.rank(two) == 2);
  CHECK(k3.rank(0b001) == 1);
  CHECK(k3.rank(0) == 0);

  // a tree is a free matroid
  Matroid tree = Matroid::graphic(path_graph(4));
  for (std::uint32_t mask = 0; mask < 16; ++mask)
    CHECK(tree.rank(mask) == std::popcount(mask));

  // a loop is a rank-zero element
  Matroid loop = Matroid::graphic(Multigraph(1, {{0, 0}}));
  CHECK(loop.rank(1) == 0);
}

TEST_CASE("vector matroid ranks") {
  F2Matrix id(3, 3);
  for (int i = 0; i < 3; ++i) id.set(i, i, true);
  Matroid free3 = Matroid::vector_f2(id);
  for (std::uint32_t mask = 0; mask < 8; ++mask)
    CHECK(free3.rank(mask) == std::popcount(mask));

  F2Matrix ones(1, 2);
  ones.set(0, 0, true);
  ones.set(0, 1, true);
  Matroid u12 = Matroid::vector_f2(ones);
  CHECK(u12.rank(0b01) == 1);
  CHECK(u12.rank(0b10) == 1);
  CHECK(u12.rank(0b11) == 1);

  F2Matrix with_zero(2, 3);
  with_zero.set(0, 0, true);
  with_zero.set(1, 1, true);
  Matroid m = Matroid::vector_f2(with_zero);
  CHECK(m.rank(0b100) == 0);  // zero column is a loop
}

TEST_CASE("incidence matroid matches the graphic rank oracle") {
  Matroid g3 = Matroid::graphic(complete_graph(3));
  Matroid i3 = incidence_matroid(complete_graph(3));
  for (std::uint32_t mask = 0; mask < 8; ++mask) CHECK(g3.rank(mask) == i3.rank(mask));

  Matroid ip2 = incidence_matroid(path_graph(2));
  for (std::uint32_t mask = 0; mask < 4; ++mask)
    CHECK(ip2.rank(mask) == std::popcount(mask));

  Matroid idig = incidence_matroid(Multigraph(2, {{0, 1}, {0, 1}}));
  CHECK(idig.rank(0b11) == 1);

  std::mt19937_64 rng(910);
  for (int round = 0; round < 25; ++round) {
    Multigraph g = random_graph(rng, 6, 7);
    Matroid a = Matroid::graphic(g), b = incidence_matroid(g);
    for (std::uint32_t mask = 0; mask < (1u << g.num_edges()); ++mask)
      CHECK(a.rank(mask) == b.rank(mask));
  }
}

TEST_CASE("rank axioms on random subsets") {
  std::mt19937_64 rng(911);
  auto pool = test_pool(rng);
  for (const auto& m : pool) {
    CHECK(m.rank(0) == 0);
    int sz = m.ground_size();
    if (sz == 0 || sz > 20) continue;
    std::uint32_t all = (1u << sz) - 1;
    for (int round = 0; round < 40; ++round) {
      std::uint32_t a = std::uint32_t(rng()) & all;
      std::uint32_t b = std::uint32_t(rng()) & all;
      int ra = m.rank(a);
      CHECK(ra <= std::popcount(a));
      CHECK(ra <= m.rank(a | b));                              // monotone
      CHECK(m.rank(a | b) + m.rank(a & b) <= ra + m.rank(b));  // submodular
    }
  }
}

TEST_CASE("Tutte subset expansion on named cases") {
  ExactPoly x = ExactPoly::term2(1, 1, 0), y = ExactPoly::term2(1, 0, 1);

  Matroid coloop = Matroid::graphic(complete_graph(2));
  CHECK(tutte_subset_expansion(coloop) == x);

  Matroid loop = Matroid::graphic(Multigraph(1, {{0, 0}}));
  CHECK(tutte_subset_expansion(loop) == y);

  ExactPoly t_k3 = tutte_subset_expansion(Matroid::graphic(complete_graph(3)));
  CHECK(t_k3 == x * x + x + y);
  CHECK(t_k3.to_string() == "x^2 + x + y");
}

TEST_CASE("deletion-contraction equals the subset expansion on the pool") {
  std::mt19937_64 rng(912);
  auto pool = test_pool(rng);
  for (const auto& m : pool) {
    if (m.ground_size() > 14) continue;
    CHECK(tutte_deletion_contraction(m) == tutte_subset_expansion(m));
  }

  // named cases
  ExactPoly x = ExactPoly::term2(1, 1, 0), y = ExactPoly::term2(1, 0, 1);
  CHECK(tutte_deletion_contraction(Matroid::graphic(path_graph(4))) == x.pow(4));
  CHECK(tutte_deletion_contraction(Matroid::graphic(Multigraph(2, {{0, 1}, {0, 1}}))) ==
        x + y);
}

TEST_CASE("Tutte specializations") {
  std::mt19937_64 rng(913);
  auto pool = test_pool(rng);
  for (const auto& m : pool) {
    if (m.ground_size() > 14) continue;
    ExactPoly t = tutte_deletion_contraction(m);
    CHECK(t.eval({Int(1), Int(1)}) == count_bases(m));
    CHECK(t.eval({Int(2), Int(2)}) == int_pow(Int(2), m.ground_size()));
  }
}

TEST_CASE("Tutte polynomial is invariant under ground-set relabeling") {
  std::mt19937_64 rng(914);
  for (int round = 0; round < 10; ++round) {
    Multigraph g = random_graph(rng, 5, 7);
    std::vector<int> perm(g.num_vertices());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(tutte_deletion_contraction(Matroid::graphic(g)) ==
          tutte_deletion_contraction(Matroid::graphic(g.relabeled(perm))));
  }
}

TEST_CASE("subset cap") {
  std::vector<Multigraph::Edge> es;
  for (int i = 0; i < 25; ++i) es.emplace_back(i, i + 1);
  CHECK_THROWS_AS(tutte_subset_expansion(Matroid::graphic(Multigraph(26, es))), CapExceeded);
}

TEST_CASE("matrix text round trip") {
  F2Matrix m = F2Matrix::parse("# comment\n1010\n0101\n");
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 4);
  CHECK(m.get(0, 0));
  CHECK_FALSE(m.get(0, 1));
  CHECK(F2Matrix::parse(m.to_text()) == m);
  CHECK_THROWS_AS(F2Matrix::parse("10\n2\n"), std::invalid_argument);
  CHECK_THROWS_AS(F2Matrix::parse("10\n1\n"), std::invalid_argument);
}
