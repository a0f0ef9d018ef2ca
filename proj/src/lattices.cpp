#include "mclat/lattices.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "mclat/errors.hpp"

namespace mclat {

QSeries theta3(long prec) {
  QSeries s(prec);
  s.add_at(0, 1);
  for (long j = 1; 4 * j * j <= prec; ++j) s.add_at(4 * j * j, 2);
  return s;
}

QSeries theta2(long prec) {
  QSeries s(prec);
  for (long j = 0; (2 * j + 1) * (2 * j + 1) <= prec; ++j)
    s.add_at((2 * j + 1) * (2 * j + 1), 2);
  return s;
}

namespace {

Int sigma_k(long n, unsigned long k) {
  Int s = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) s += int_pow(Int(d), k);
  return s;
}

}  // namespace

QSeries eisenstein_e4(long prec) {
  QSeries s(prec);
  s.add_at(0, 1);
  for (long n = 1; 8 * n <= prec; ++n) s.add_at(8 * n, 240 * sigma_k(n, 3));
  return s;
}

QSeries eisenstein_e6(long prec) {
  QSeries s(prec);
  s.add_at(0, 1);
  for (long n = 1; 8 * n <= prec; ++n) s.add_at(8 * n, -504 * sigma_k(n, 5));
  return s;
}

QSeries delta_series(long prec) {
  QSeries e4 = eisenstein_e4(prec);
  QSeries e6 = eisenstein_e6(prec);
  QSeries num = e4.pow(3) + e6.pow(2).scaled(-1);
  QSeries out(prec);
  for (const auto& [k, v] : num.coeffs()) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), Int(1728).get_mpz_t());
    if (r != 0)
      throw std::domain_error("delta_series: non-exact division by 1728 (arithmetic bug)");
    out.add_at(k, q);
  }
  return out;
}

QSeries theta_from_code(const BinaryCode& c, long prec, int cap_dim) {
  ExactPoly w = weight_enumerator_enum(c, cap_dim);

  long half = (prec + 1) / 2;
  QSeries t3 = theta3(half).stretch2().truncated(prec);
  QSeries t2 = theta2(half).stretch2().truncated(prec);

  int n = c.length();
  std::vector<QSeries> pow3(n + 1, QSeries(prec)), pow2(n + 1, QSeries(prec));
  pow3[0] = pow2[0] = QSeries::one(prec);
  for (int i = 1; i <= n; ++i) {
    pow3[i] = pow3[i - 1] * t3;
    pow2[i] = pow2[i - 1] * t2;
  }

  QSeries out(prec);
  for (const auto& [exps, coeff] : w.terms()) {
    unsigned long a = to_ulong_checked(exps[0], "weight enumerator exponent");
    unsigned long b = to_ulong_checked(exps[1], "weight enumerator exponent");
    out = out + (pow3[a] * pow2[b]).scaled(coeff);
  }
  return out;
}

QSeries theta_direct(const BinaryCode& c, long prec, int max_length) {
  int n = c.length();
  if (n > max_length)
    throw CapExceeded("theta_direct: length " + std::to_string(n) + " exceeds cap " +
                      std::to_string(max_length));
  long max_norm = prec / 2;  // (z,z) <= prec/2 gives quarter exponent 2(z,z) <= prec

  QSeries out(prec);
  c.for_each_codeword([&](const std::vector<std::uint64_t>& word, int) {
    // coordinates congruent to the codeword mod 2, pruned by partial norm
    std::function<void(int, long)> rec = [&](int i, long norm) {
      if (i == n) {
        out.add_at(2 * norm, 1);
        return;
      }
      bool odd = (word[i / 64] >> (i % 64)) & 1u;
      if (!odd) rec(i + 1, norm);  // v = 0
      for (long v = odd ? 1 : 2; v * v + norm <= max_norm; v += 2) {
        rec(i + 1, norm + v * v);  // +v
        rec(i + 1, norm + v * v);  // -v
      }
    };
    rec(0, 0);
  });
  return out;
}

Rat gram_determinant(const BinaryCode& c) {
  int n = c.length();
  int k = c.dim();
  const F2Matrix& g = c.generator();

  // integer basis of {z : rho(z) in C}: lifted generator rows plus 2*e_j
  // for the non-pivot columns
  std::vector<bool> is_pivot(n, false);
  for (int r = 0; r < k; ++r) {
    int col = 0;
    while (col < n && !g.get(r, col)) ++col;
    is_pivot[col] = true;
  }
  std::vector<std::vector<Int>> b(n, std::vector<Int>(n, 0));
  for (int r = 0; r < k; ++r)
    for (int col = 0; col < n; ++col)
      if (g.get(r, col)) b[r][col] = 1;
  int row = k;
  for (int col = 0; col < n; ++col)
    if (!is_pivot[col]) b[row++][col] = 2;

  // Gram of the scaled basis rows b_i / sqrt(2)
  std::vector<std::vector<Rat>> gram(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Int dot = 0;
      for (int t = 0; t < n; ++t) dot += b[i][t] * b[j][t];
      gram[i][j] = Rat(dot, 2);
      gram[i][j].canonicalize();
    }

  // fraction-free determinant via rational elimination
  Rat det = 1;
  for (int col = 0; col < n; ++col) {
    int sel = -1;
    for (int r = col; r < n; ++r)
      if (gram[r][col] != 0) {
        sel = r;
        break;
      }
    if (sel < 0) return Rat(0);
    if (sel != col) {
      std::swap(gram[sel], gram[col]);
      det = -det;
    }
    det *= gram[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (gram[r][col] == 0) continue;
      Rat f = gram[r][col] / gram[col][col];
      for (int t = col; t < n; ++t) gram[r][t] -= f * gram[col][t];
    }
  }
  det.canonicalize();
  return det;
}

}  // namespace mclat
