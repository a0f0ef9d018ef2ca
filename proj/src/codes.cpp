#include "mclat/codes.hpp"

#include <bit>
#include <stdexcept>

#include "mclat/errors.hpp"

namespace mclat {

BinaryCode BinaryCode::from_generator(const F2Matrix& rows) {
  return BinaryCode(rows.cols(), rows.rref());
}

BinaryCode BinaryCode::zero_code(int length) {
  if (length < 0) throw std::invalid_argument("zero_code: negative length");
  return BinaryCode(length, F2Matrix(0, length));
}

BinaryCode BinaryCode::direct_sum(const BinaryCode& a, const BinaryCode& b) {
  F2Matrix g(a.dim() + b.dim(), a.length() + b.length());
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.length(); ++c)
      if (a.gen_.get(r, c)) g.set(r, c, true);
  for (int r = 0; r < b.dim(); ++r)
    for (int c = 0; c < b.length(); ++c)
      if (b.gen_.get(r, c)) g.set(a.dim() + r, a.length() + c, true);
  return from_generator(g);
}

BinaryCode BinaryCode::dual() const {
  // kernel basis from the RREF generator: one vector per non-pivot column
  std::vector<int> pivot_col(dim());
  std::vector<bool> is_pivot(n_, false);
  for (int r = 0; r < dim(); ++r) {
    int c = 0;
    while (c < n_ && !gen_.get(r, c)) ++c;
    pivot_col[r] = c;
    is_pivot[c] = true;
  }
  F2Matrix d(n_ - dim(), n_);
  int dr = 0;
  for (int c = 0; c < n_; ++c) {
    if (is_pivot[c]) continue;
    d.set(dr, c, true);
    for (int r = 0; r < dim(); ++r)
      if (gen_.get(r, c)) d.set(dr, pivot_col[r], true);
    ++dr;
  }
  return from_generator(d);
}

bool BinaryCode::is_self_dual() const { return *this == dual(); }

bool BinaryCode::is_doubly_even() const {
  for (int r = 0; r < dim(); ++r) {
    if (gen_.row_weight(r) % 4 != 0) return false;
    for (int s = r + 1; s < dim(); ++s)
      if (gen_.row_dot(r, gen_, s) % 2 != 0) return false;
  }
  return true;
}

BinaryCode BinaryCode::replicate4() const {
  F2Matrix g(dim(), 4 * n_);
  for (int r = 0; r < dim(); ++r)
    for (int c = 0; c < n_; ++c)
      if (gen_.get(r, c))
        for (int t = 0; t < 4; ++t) g.set(r, 4 * c + t, true);
  return from_generator(g);
}

void BinaryCode::for_each_codeword(
    const std::function<void(const std::vector<std::uint64_t>&, int)>& fn, int cap_dim) const {
  int k = dim();
  if (k > cap_dim)
    throw CapExceeded("for_each_codeword: dimension " + std::to_string(k) + " exceeds cap " +
                      std::to_string(cap_dim));
  int words = (n_ + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(k, std::vector<std::uint64_t>(words, 0));
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < n_; ++c)
      if (gen_.get(r, c)) rows[r][c / 64] |= std::uint64_t(1) << (c % 64);

  std::vector<std::uint64_t> word(words, 0);
  auto weight = [&] {
    int w = 0;
    for (std::uint64_t x : word) w += std::popcount(x);
    return w;
  };
  fn(word, 0);
  for (std::uint64_t i = 1; i < (std::uint64_t(1) << k); ++i) {
    int flip = std::countr_zero(i);  // Gray code: one generator per step
    for (int w = 0; w < words; ++w) word[w] ^= rows[flip][w];
    fn(word, weight());
  }
}

ExactPoly weight_enumerator_enum(const BinaryCode& c, int cap_dim) {
  std::vector<long> tally(c.length() + 1, 0);
  c.for_each_codeword([&](const std::vector<std::uint64_t>&, int wt) { tally[wt]++; },
                      cap_dim);
  ExactPoly w(2);
  for (int wt = 0; wt <= c.length(); ++wt)
    if (tally[wt] != 0) w.add_term({Int(c.length() - wt), Int(wt)}, Int(tally[wt]));
  return w;
}

ExactPoly weight_enumerator_greene(const Matroid& m, int cap) {
  auto counts = m.corank_nullity_counts(cap);
  int n = m.ground_size();
  int k = m.full_rank();

  std::vector<ExactPoly> xmy(n + 1, ExactPoly(2));  // (x - y)^a
  xmy[0] = ExactPoly::constant(2, 1);
  ExactPoly x_minus_y = ExactPoly::term2(1, 1, 0) - ExactPoly::term2(1, 0, 1);
  for (int i = 1; i <= n; ++i) xmy[i] = xmy[i - 1] * x_minus_y;

  ExactPoly w(2);
  for (const auto& [ra, cnt] : counts) {
    auto [r, a] = ra;
    Int scale = cnt * int_pow(Int(2), static_cast<unsigned long>(k - r));
    w += (xmy[a] * ExactPoly::term2(1, 0, Int(n - a))).scaled(scale);
  }
  return w;
}

BinaryCode code_from_matroid(const Matroid& m) {
  if (m.is_graphic())
    throw std::invalid_argument(
        "code_from_matroid: graphic backing; convert via incidence_matroid first");
  return BinaryCode::from_generator(m.matrix());
}

ExactPoly p8_polynomial() {
  ExactPoly p(2);
  p.add_term({Int(8), Int(0)}, 1);
  p.add_term({Int(4), Int(4)}, 14);
  p.add_term({Int(0), Int(8)}, 1);
  return p;
}

ExactPoly p24_polynomial() {
  ExactPoly x4 = ExactPoly::term2(1, 4, 0);
  ExactPoly y4 = ExactPoly::term2(1, 0, 4);
  return x4 * y4 * (x4 - y4).pow(4);
}

}  // namespace mclat
