#pragma once

#include <map>
#include <set>
#include <utility>

#include "mclat/graphs.hpp"
#include "mclat/poly.hpp"
#include "mclat/primes.hpp"

namespace mclat {

// Z over symbolic variables x_ij (1 <= i <= j <= n): the sum over all
// n^|V| state assignments of the product of edge variables.
struct SymbolicStatePoly {
  int n = 0;          // state count
  ExactPoly poly{1};  // arity n(n+1)/2
};

// Univariate specialization where state pair (i,j) carries the monomial
// p*x^p for the table prime p = w(i,j). Each state contributes
// coefficient prod(p) at exponent sum(p).
struct PseudoStatePoly {
  WeightMatrix matrix;
  ExactPoly poly{1};
  std::size_t term_count() const { return poly.term_count(); }
};

// One decoded monomial c*x^s of a pseudo polynomial: the multiset of
// index pairs extracted from the prime factorization of c, the leftover
// cofactor, and the support (indices of non-diagonal pairs).
struct DecodedTerm {
  Int coefficient;
  Int exponent;
  std::map<std::pair<int, int>, long> index_multiset;  // (i,j) i<=j -> multiplicity
  Int cofactor;
  std::set<int> support;
};

// 0-based position of variable x_ij (1 <= i <= j <= n) in the fixed
// variable order (1,1),(1,2),...,(1,n),(2,2),...,(n,n).
int pair_var_index(int n, int i, int j);

SymbolicStatePoly z_state_symbolic(const Multigraph& g, int n,
                                   const Int& state_cap = Int(100000000));

PseudoStatePoly z_state_weighted(const Multigraph& g, const WeightMatrix& w,
                                 const Int& state_cap = Int(100000000));

// |E| = log2(coefficient sum) for a 1-state pseudo polynomial; rejects
// inputs whose coefficient sum is not a power of two.
long edge_count_w1(const ExactPoly& z);

// Extracts the index multiset by repeated division by the table primes
// and verifies sum(p * multiplicity) == s.
DecodedTerm decode_term(const Int& c, const Int& s, const WeightMatrix& w);

// Inverts z_state_weighted up to isomorphism. Requires w to pass the
// admissibility check for the decoded edge count, at least two states,
// and states >= 2 * edge count; graphs with loops are rejected.
Multigraph reconstruct_pseudo(const ExactPoly& z, const WeightMatrix& w);
Multigraph reconstruct_pseudo(const PseudoStatePoly& z);

// Inverts z_state_symbolic up to isomorphism (n >= 2 and n >= |V| of the
// source graph). Loops are recovered from diagonal variables.
Multigraph reconstruct_symbolic(const SymbolicStatePoly& z);

// Specialization hook: x_ii -> x + y, x_ij -> y (i < j); the result is
// the bivariate polynomial obtained from the diagonal-offdiagonal weight
// pattern.
ExactPoly negami_specialize(const SymbolicStatePoly& z);

}  // namespace mclat
