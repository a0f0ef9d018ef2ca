#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mclat/bigint.hpp"

namespace mclat {

// Sparse polynomial with arbitrary-precision integer coefficients and
// arbitrary-precision nonnegative exponents. The number of variables is
// fixed per polynomial: 1 (univariate), 2 (e.g. Tutte, weight
// enumerators) or n(n+1)/2 (state polynomials over indexed variables).
//
// Canonical form: no zero coefficients, exponent keys unique. Equality
// is term-map equality.
class ExactPoly {
 public:
  using Exps = std::vector<Int>;
  using TermMap = std::map<Exps, Int>;

  explicit ExactPoly(int arity = 1);

  static ExactPoly zero(int arity);
  static ExactPoly constant(int arity, const Int& c);
  static ExactPoly monomial(Exps exps, const Int& coeff);
  // univariate convenience
  static ExactPoly term1(const Int& coeff, const Int& exp);
  // bivariate convenience
  static ExactPoly term2(const Int& coeff, const Int& e1, const Int& e2);

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // Accumulates coeff * x^exps, dropping the term if it cancels.
  void add_term(const Exps& exps, const Int& coeff);

  ExactPoly operator+(const ExactPoly& o) const;
  ExactPoly operator-(const ExactPoly& o) const;
  ExactPoly operator*(const ExactPoly& o) const;
  ExactPoly& operator+=(const ExactPoly& o);
  bool operator==(const ExactPoly& o) const;
  bool operator!=(const ExactPoly& o) const { return !(*this == o); }

  ExactPoly scaled(const Int& c) const;
  ExactPoly pow(unsigned long e) const;

  // Sum of all coefficients == evaluation at all-ones.
  Int coeff_sum() const;
  // Full evaluation; every exponent must fit in an unsigned long.
  Int eval(const std::vector<Int>& point) const;

  // Substitutes a polynomial for each variable (all images share one
  // arity). Exponents must fit in an unsigned long.
  ExactPoly substitute(const std::vector<ExactPoly>& images) const;

  // Terms sorted by exponent vector descending, e.g. "311x^311 + 7x^7".
  // var_name(i) names variable i; defaults to x / x,y.
  std::string to_string() const;
  std::string to_string(const std::function<std::string(int)>& var_name) const;

 private:
  int arity_;
  TermMap terms_;
};

// Truncated formal q-series on a quarter-integer exponent grid: the key k
// stands for the exponent k/4. All arithmetic truncates at
// precision_quarters; equality compares coefficients up to the *common*
// precision of the two operands.
class QSeries {
 public:
  explicit QSeries(long precision_quarters);

  static QSeries one(long precision_quarters);

  long precision() const { return prec_; }
  const std::map<long, Int>& coeffs() const { return coeffs_; }

  // Accumulates v at exponent quarters/4; silently drops k > precision.
  void add_at(long quarters, const Int& v);
  Int coeff_at(long quarters) const;

  QSeries operator+(const QSeries& o) const;
  QSeries operator*(const QSeries& o) const;  // requires equal precisions
  QSeries pow(unsigned long e) const;
  QSeries scaled(const Int& c) const;

  // q -> q^2: doubles every exponent (and the precision).
  QSeries stretch2() const;
  QSeries truncated(long precision_quarters) const;

  bool operator==(const QSeries& o) const;
  bool operator!=(const QSeries& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  long prec_;
  std::map<long, Int> coeffs_;
};

}  // namespace mclat
