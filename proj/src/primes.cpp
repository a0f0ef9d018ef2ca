#include "mclat/primes.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "mclat/errors.hpp"

namespace mclat {

Int a_index(long i, long j) {
  if (i < 1 || j < 1) throw std::invalid_argument("a_index: indices must be positive");
  Int ii(i);
  return ii * (ii + 1) / 2 + (j - i);
}

const PrimeCache& PrimeCache::builtin() {
  static const PrimeCache cache = [] {
    PrimeCache c;
    // P(n^(n*a(i,j))) for the n <= 3 matrices, plus P(1) for n = 1
    c.insert(1, 2);
    c.insert(4, 7);
    c.insert(16, 53);
    c.insert(64, 311);
    c.insert(27, 103);
    c.insert(729, 5519);
    c.insert(19683, 220861);
    c.insert(531441, 7867547);
    c.insert(14348907, 262960091);
    c.insert(387420489, Int("8448283757"));
    return c;
  }();
  return cache;
}

void PrimeCache::insert(const Int& index, const Int& prime) {
  if (index < 1) throw std::invalid_argument("PrimeCache: index must be >= 1");
  if (mpz_probab_prime_p(prime.get_mpz_t(), 32) == 0)
    throw std::invalid_argument("PrimeCache: " + prime.get_str() + " is not prime");
  auto it = table_.find(index);
  if (it != table_.end() && it->second != prime)
    throw std::invalid_argument("PrimeCache: conflicting entry for index " + index.get_str());
  table_[index] = prime;
}

void PrimeCache::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open prime cache: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string a, b;
    if (!(ls >> a) || a[0] == '#') continue;
    if (!(ls >> b))
      throw std::invalid_argument(path + " line " + std::to_string(lineno) +
                                  ": expected '<index> <prime>'");
    insert(Int(a), Int(b));
  }
}

std::optional<Int> PrimeCache::lookup(const Int& index) const {
  auto it = table_.find(index);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<std::uint8_t> composite(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  return primes;
}

namespace {

// Counts odd primes segment by segment until the target index is reached.
// Returns 0 if the ell-th prime is above `limit`.
std::uint64_t sieve_for_nth(std::uint64_t ell, std::uint64_t limit) {
  const std::uint64_t seg_bytes = 1u << 20;  // one byte per odd number
  std::uint64_t sqrt_limit = static_cast<std::uint64_t>(std::sqrt(double(limit))) + 2;
  auto base = primes_up_to(sqrt_limit);

  std::uint64_t count = 1;  // the prime 2
  if (ell == 1) return 2;

  std::vector<std::uint8_t> seg(seg_bytes);
  for (std::uint64_t low = 3; low <= limit; low += 2 * seg_bytes) {
    std::uint64_t high = std::min(low + 2 * seg_bytes - 1, limit);  // odds in [low, high]
    std::size_t n_odds = static_cast<std::size_t>((high - low) / 2 + 1);
    std::fill(seg.begin(), seg.begin() + n_odds, 0);
    for (std::uint64_t p : base) {
      if (p == 2) continue;
      if (p * p > high) break;
      std::uint64_t start = std::max(p * p, ((low + p - 1) / p) * p);
      if (start % 2 == 0) start += p;
      for (std::uint64_t m = start; m <= high; m += 2 * p) seg[(m - low) / 2] = 1;
    }
    for (std::size_t i = 0; i < n_odds; ++i) {
      if (!seg[i] && ++count == ell) return low + 2 * i;
    }
  }
  return 0;
}

}  // namespace

std::uint64_t nth_prime_u64(std::uint64_t ell) {
  if (ell == 0) throw std::invalid_argument("nth_prime: index must be >= 1");
  static const std::uint64_t small[] = {2, 3, 5, 7, 11, 13};
  if (ell <= 6) return small[ell - 1];
  // Rosser: p_ell < ell (ln ell + ln ln ell) for ell >= 6
  double x = double(ell);
  double bound = x * (std::log(x) + std::log(std::log(x)));
  std::uint64_t limit = static_cast<std::uint64_t>(bound) + 16;
  for (;;) {
    std::uint64_t p = sieve_for_nth(ell, limit);
    if (p != 0) return p;
    limit += limit / 8;  // not expected to trigger; the bound is proven
  }
}

Int nth_prime(const Int& ell, const PrimeOptions& opts) {
  if (ell < 1) throw std::invalid_argument("nth_prime: index must be >= 1");
  if (opts.use_cache) {
    if (auto hit = PrimeCache::builtin().lookup(ell)) return *hit;
    if (opts.extra_cache)
      if (auto hit = opts.extra_cache->lookup(ell)) return *hit;
  }
  if (ell > opts.cap)
    throw CapExceeded("nth_prime: index " + ell.get_str() + " exceeds cap " +
                      opts.cap.get_str() + " and is not cached");
  return Int(nth_prime_u64(to_ulong_checked(ell, "prime index")));
}

WeightMatrix::WeightMatrix(int n, std::vector<Int> lower_triangle)
    : n_(n), tri_(std::move(lower_triangle)) {
  if (n < 1) throw std::invalid_argument("WeightMatrix: n must be >= 1");
  if (tri_.size() != std::size_t(n) * (n + 1) / 2)
    throw std::invalid_argument("WeightMatrix: triangle has wrong length");
  int idx = 0;
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= i; ++j, ++idx) {
      auto [it, fresh] = reverse_.emplace(tri_[idx], std::make_pair(j, i));
      if (!fresh)
        throw std::invalid_argument("WeightMatrix: duplicate prime " + tri_[idx].get_str());
    }
  }
}

const Int& WeightMatrix::prime(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_)
    throw std::invalid_argument("WeightMatrix: index out of range");
  if (i < j) std::swap(i, j);
  return tri_[std::size_t(i) * (i - 1) / 2 + (j - 1)];
}

std::optional<std::pair<int, int>> WeightMatrix::lookup(const Int& p) const {
  auto it = reverse_.find(p);
  if (it == reverse_.end()) return std::nullopt;
  return it->second;
}

std::string WeightMatrix::to_string() const {
  std::ostringstream out;
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      const Int& p = prime(i, j);
      out << p.get_str() << "x^" << p.get_str() << (j == n_ ? "" : "  ");
    }
    out << "\n";
  }
  return out.str();
}

AdmissibilityCertificate verify_admissible(const WeightMatrix& w, long m) {
  AdmissibilityCertificate cert;
  cert.m = m;
  cert.n = w.states();
  cert.ok = false;
  if (m < 0) {
    cert.detail = "negative edge budget";
    return cert;
  }
  Int floor = std::max<Int>(Int(3) * m, Int(w.states()));
  for (int i = 1; i <= w.states(); ++i) {
    for (int j = 1; j <= i; ++j) {
      const Int& p = w.prime(i, j);
      if (mpz_probab_prime_p(p.get_mpz_t(), 32) == 0) {
        cert.detail = "entry (" + std::to_string(i) + "," + std::to_string(j) + ") not prime";
        return cert;
      }
      if (p <= floor) {
        cert.detail = "entry (" + std::to_string(i) + "," + std::to_string(j) +
                      ") <= max(3m, n) = " + floor.get_str();
        return cert;
      }
      if (j >= 2 && !(m * w.prime(i, j - 1) < p)) {
        cert.detail = "gap m*p(" + std::to_string(i) + "," + std::to_string(j - 1) +
                      ") < p(" + std::to_string(i) + "," + std::to_string(j) + ") violated";
        return cert;
      }
    }
    if (i >= 2 && !(m * w.prime(i - 1, i - 1) < w.prime(i, 1))) {
      cert.detail = "gap m*p(" + std::to_string(i - 1) + "," + std::to_string(i - 1) +
                    ") < p(" + std::to_string(i) + ",1) violated";
      return cert;
    }
  }
  // distinctness is enforced by the WeightMatrix constructor
  cert.ok = true;
  return cert;
}

WeightMatrix paper_weight_matrix(int n, const PrimeOptions& opts) {
  if (n < 1) throw std::invalid_argument("paper_weight_matrix: n must be >= 1");
  std::vector<Int> tri;
  tri.reserve(std::size_t(n) * (n + 1) / 2);
  Int base(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) {
      Int exp = Int(n) * a_index(i, j);
      unsigned long e = to_ulong_checked(exp, "weight matrix index exponent");
      Int index = int_pow(base, e);
      tri.push_back(nth_prime(index, opts));
    }
  }
  return WeightMatrix(n, std::move(tri));
}

std::pair<WeightMatrix, AdmissibilityCertificate> admissible_matrix(long m, int n) {
  if (m < 0) throw std::invalid_argument("admissible_matrix: negative edge budget");
  if (n < 1) throw std::invalid_argument("admissible_matrix: n must be >= 1");
  std::vector<Int> tri;
  tri.reserve(std::size_t(n) * (n + 1) / 2);
  Int prev = std::max<Int>(Int(3) * m, Int(n));  // entries must exceed this floor
  for (int k = 0; k < n * (n + 1) / 2; ++k) {
    Int lower = tri.empty() ? prev : std::max<Int>(prev * m, prev);
    Int next;
    mpz_nextprime(next.get_mpz_t(), lower.get_mpz_t());
    tri.push_back(next);
    prev = next;
  }
  WeightMatrix w(n, std::move(tri));
  AdmissibilityCertificate cert = verify_admissible(w, m);
  if (!cert.ok)
    throw std::logic_error("admissible_matrix: construction failed verification: " + cert.detail);
  return {std::move(w), cert};
}

}  // namespace mclat
