#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mclat/poly.hpp"

using namespace mclat;

namespace {

ExactPoly random_poly(std::mt19937_64& rng, int arity, int max_terms) {
  std::uniform_int_distribution<int> nterms(0, max_terms), expd(0, 4), coeffd(-9, 9);
  ExactPoly p(arity);
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    ExactPoly::Exps e;
    for (int i = 0; i < arity; ++i) e.emplace_back(expd(rng));
    p.add_term(e, coeffd(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("addition: cancellation, identity, like terms") {
  ExactPoly x = ExactPoly::term2(1, 1, 0);
  ExactPoly y = ExactPoly::term2(1, 0, 1);
  CHECK((x + y) + (x - y) == x.scaled(2));

  ExactPoly p = ExactPoly::term1(3, 5) + ExactPoly::term1(-2, 0);
  CHECK(p + ExactPoly::zero(1) == p);

  ExactPoly seven = ExactPoly::term1(7, 7);
  CHECK(seven + seven == ExactPoly::term1(14, 7));
}

TEST_CASE("multiplication: monomials, identity, squared P8") {
  ExactPoly m = ExactPoly::term1(53, 53);
  CHECK(m * m == ExactPoly::term1(Int(53) * 53, 106));

  ExactPoly p = ExactPoly::term1(2, 3) + ExactPoly::term1(-1, 1);
  CHECK(p * ExactPoly::constant(1, 1) == p);

  // (x^8 + 14 x^4 y^4 + y^8)^2
  ExactPoly p8(2);
  p8.add_term({Int(8), Int(0)}, 1);
  p8.add_term({Int(4), Int(4)}, 14);
  p8.add_term({Int(0), Int(8)}, 1);
  ExactPoly sq = p8 * p8;
  ExactPoly expect(2);
  expect.add_term({Int(16), Int(0)}, 1);
  expect.add_term({Int(12), Int(4)}, 28);
  expect.add_term({Int(8), Int(8)}, 198);
  expect.add_term({Int(4), Int(12)}, 28);
  expect.add_term({Int(0), Int(16)}, 1);
  CHECK(sq == expect);
}

TEST_CASE("arity mismatch is rejected") {
  ExactPoly u = ExactPoly::term1(1, 2);
  ExactPoly b = ExactPoly::term2(1, 1, 1);
  CHECK_THROWS_AS((void)(u + b), std::invalid_argument);
  CHECK_THROWS_AS((void)(u * b), std::invalid_argument);
}

TEST_CASE("ring axioms on random inputs") {
  std::mt19937_64 rng(20240401);
  for (int round = 0; round < 60; ++round) {
    int arity = 1 + int(rng() % 3);
    ExactPoly a = random_poly(rng, arity, 5);
    ExactPoly b = random_poly(rng, arity, 5);
    ExactPoly c = random_poly(rng, arity, 5);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("exponent arithmetic survives machine-word boundaries") {
  Int huge = (Int(1) << 64) - 5;
  ExactPoly a = ExactPoly::term1(3, huge);
  ExactPoly b = ExactPoly::term1(5, huge + 2);
  ExactPoly prod = a * b;
  REQUIRE(prod.term_count() == 1);
  const auto& [exps, coeff] = *prod.terms().begin();
  CHECK(exps[0] == (Int(1) << 65) - 8);
  CHECK(coeff == 15);

  ExactPoly s = a + a;
  CHECK(s == ExactPoly::term1(6, huge));
}

TEST_CASE("series: identity, truncation, theta2 squared") {
  // theta3 * 1 = theta3 (precision 16 quarters)
  QSeries t3(16);
  t3.add_at(0, 1);
  t3.add_at(4, 2);
  t3.add_at(16, 2);
  CHECK(t3 * QSeries::one(16) == t3);

  // (1 + 2q)^2 truncated at q^1
  QSeries p(4);
  p.add_at(0, 1);
  p.add_at(4, 2);
  QSeries sq = p * p;
  CHECK(sq.coeff_at(0) == 1);
  CHECK(sq.coeff_at(4) == 4);

  // theta2^2 at precision 3 in q (12 quarters): oracle is the double sum
  // over half-integers
  long prec = 12;
  QSeries t2(prec);
  for (long j = 0; (2 * j + 1) * (2 * j + 1) <= prec; ++j)
    t2.add_at((2 * j + 1) * (2 * j + 1), 2);
  QSeries got = t2 * t2;

  QSeries oracle(prec);
  for (long j = -8; j <= 8; ++j)
    for (long k = -8; k <= 8; ++k) {
      long quarters = (2 * j + 1) * (2 * j + 1) + (2 * k + 1) * (2 * k + 1);
      if (quarters <= prec) oracle.add_at(quarters, 1);
    }
  CHECK(got == oracle);
  CHECK(got.coeff_at(2) == 4);   // 4 q^(1/2)
  CHECK(got.coeff_at(10) == 8);  // 8 q^(5/2)
}

TEST_CASE("series multiplication equals dense convolution") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> cd(-4, 4);
  for (int round = 0; round < 25; ++round) {
    long prec = 1 + long(rng() % 24);
    QSeries a(prec), b(prec);
    std::vector<Int> da(prec + 1, 0), db(prec + 1, 0);
    for (long k = 0; k <= prec; ++k) {
      int ca = cd(rng), cb = cd(rng);
      a.add_at(k, ca);
      b.add_at(k, cb);
      da[k] = ca;
      db[k] = cb;
    }
    QSeries prod = a * b;
    for (long k = 0; k <= prec; ++k) {
      Int conv = 0;
      for (long i = 0; i <= k; ++i) conv += da[i] * db[k - i];
      CHECK(prod.coeff_at(k) == conv);
    }
  }
}

TEST_CASE("series precision mismatch is rejected") {
  QSeries a(8), b(12);
  CHECK_THROWS_AS((void)(a * b), std::invalid_argument);
}

TEST_CASE("printing follows descending exponent order") {
  ExactPoly z = ExactPoly::term1(7, 7) + ExactPoly::term1(311, 311) + ExactPoly::term1(106, 53);
  CHECK(z.to_string() == "311x^311 + 106x^53 + 7x^7");

  ExactPoly t(2);
  t.add_term({Int(2), Int(0)}, 1);
  t.add_term({Int(1), Int(0)}, 1);
  t.add_term({Int(0), Int(1)}, 1);
  CHECK(t.to_string() == "x^2 + x + y");
}
