#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mclat/bigint.hpp"

namespace mclat {

// Index into the lower triangle walked row by row:
// (1,1) -> 1, (2,1) -> 2, (2,2) -> 3, (3,1) -> 4, ...
// Defined as i(i+1)/2 + (j - i); callers use it with i >= j.
Int a_index(long i, long j);

// Verified cache of known (index, prime) pairs. The built-in table holds
// the values needed for the n <= 3 prime-weight matrices; files with
// "<index> <prime>" lines can extend it.
class PrimeCache {
 public:
  static const PrimeCache& builtin();

  PrimeCache() = default;
  void insert(const Int& index, const Int& prime);
  void load_file(const std::string& path);
  std::optional<Int> lookup(const Int& index) const;
  std::size_t size() const { return table_.size(); }

 private:
  std::map<Int, Int> table_;
};

struct PrimeOptions {
  Int cap = Int(400000000);  // feasibility cap on the prime index
  bool use_cache = true;
  const PrimeCache* extra_cache = nullptr;
};

// The ell-th prime, P(1) = 2. Consults the cache first, then runs a
// segmented sieve. Throws CapExceeded when ell exceeds the cap and is
// not cached.
Int nth_prime(const Int& ell, const PrimeOptions& opts = {});

// Sieve-only variant (never touches the cache).
std::uint64_t nth_prime_u64(std::uint64_t ell);

// All primes <= limit, by a simple sieve.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

// Symmetric n x n table whose (i,j) entry is the monomial p(i,j)*x^p(i,j)
// for a prime p(i,j); all primes are pairwise distinct and the reverse
// index maps each prime back to its unordered index pair.
class WeightMatrix {
 public:
  WeightMatrix(int n, std::vector<Int> lower_triangle);

  int states() const { return n_; }
  // 1-based, symmetric in (i, j)
  const Int& prime(int i, int j) const;
  // pair (i, j) with i <= j, if the value is a table prime
  std::optional<std::pair<int, int>> lookup(const Int& prime) const;
  const std::vector<Int>& lower_triangle() const { return tri_; }

  bool operator==(const WeightMatrix& o) const {
    return n_ == o.n_ && tri_ == o.tri_;
  }

  std::string to_string() const;

 private:
  int n_;
  std::vector<Int> tri_;  // row-major lower triangle
  std::map<Int, std::pair<int, int>> reverse_;
};

struct AdmissibilityCertificate {
  long m = 0;  // edge budget the gap inequalities were checked against
  int n = 0;
  bool ok = false;
  std::string detail;  // first violated condition, when !ok
};

// Independent re-check of the gap conditions: every entry prime, pairwise
// distinct, min prime > max(3m, n), and m*p(i,i) < p(i+1,1),
// m*p(i,j-1) < p(i,j) along the triangle.
AdmissibilityCertificate verify_admissible(const WeightMatrix& w, long m);

// The prime-weight matrix with p(i,j) = P(n^(n*a(i,j))). Feasible only
// for small n; indices outside cache/cap raise CapExceeded.
WeightMatrix paper_weight_matrix(int n, const PrimeOptions& opts = {});

// Greedy small replacement for the paper matrix: distinct primes chosen
// in triangle order, starting just above max(3m, n) and keeping every
// entry more than m times its predecessor, so the gap conditions hold
// for edge budget m.
std::pair<WeightMatrix, AdmissibilityCertificate> admissible_matrix(long m, int n);

}  // namespace mclat
