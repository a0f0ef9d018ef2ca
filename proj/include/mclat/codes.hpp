#pragma once

#include <functional>

#include "mclat/matroids.hpp"
#include "mclat/poly.hpp"

namespace mclat {

// Binary linear code held as its generator matrix in reduced row-echelon
// form (zero rows dropped), so equality of codes is equality of matrices.
class BinaryCode {
 public:
  static BinaryCode from_generator(const F2Matrix& rows);
  static BinaryCode zero_code(int length);
  static BinaryCode direct_sum(const BinaryCode& a, const BinaryCode& b);

  int length() const { return n_; }
  int dim() const { return gen_.rows(); }
  const F2Matrix& generator() const { return gen_; }

  bool operator==(const BinaryCode& o) const { return n_ == o.n_ && gen_ == o.gen_; }
  bool operator!=(const BinaryCode& o) const { return !(*this == o); }

  BinaryCode dual() const;
  bool is_self_dual() const;
  // all codeword weights divisible by four, decided on the generator
  // basis: wt(g_i) = 0 mod 4 and (g_i, g_j) = 0 mod 2
  bool is_doubly_even() const;

  // coordinate replication 0 -> 0000, 1 -> 1111; always doubly even
  BinaryCode replicate4() const;

  // Visits all 2^k codewords in Gray-code order (one generator flips per
  // step); fn receives the packed word and its weight. Cap on k applies.
  void for_each_codeword(const std::function<void(const std::vector<std::uint64_t>&, int)>& fn,
                         int cap_dim = 24) const;

 private:
  BinaryCode(int n, F2Matrix gen) : n_(n), gen_(std::move(gen)) {}
  int n_;
  F2Matrix gen_;
};

// w_C(x, y) = sum over codewords of x^(n-wt) y^wt, by direct enumeration.
ExactPoly weight_enumerator_enum(const BinaryCode& c, int cap_dim = 24);

// Same polynomial from the matroid side, using the cleared-denominator
// subset form sum_A 2^(k - rank(A)) x2^(n-|A|) (x1 - x2)^|A| of the Tutte
// substitution; anchored to weight_enumerator_enum by tests.
ExactPoly weight_enumerator_greene(const Matroid& m, int cap = 24);

// Row space of the backing matrix of a vector matroid, canonicalized.
// Graphic backings are rejected (convert via incidence_matroid first).
BinaryCode code_from_matroid(const Matroid& m);

// Classical weight-enumerator generators for doubly even self-dual codes.
ExactPoly p8_polynomial();   // x^8 + 14 x^4 y^4 + y^8
ExactPoly p24_polynomial();  // x^4 y^4 (x^4 - y^4)^4

}  // namespace mclat
