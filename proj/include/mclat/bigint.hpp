#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace mclat {

// Arbitrary-precision integers/rationals. GMP does the arithmetic; these
// aliases keep the rest of the library readable.
using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// If v == base^k for some k >= 0, returns k. base must be >= 2, v >= 1.
inline std::optional<unsigned long> exact_log(const Int& v, const Int& base) {
  if (base < 2 || v < 1) return std::nullopt;
  Int cur = 1;
  unsigned long k = 0;
  while (cur < v) {
    cur *= base;
    ++k;
  }
  if (cur == v) return k;
  return std::nullopt;
}

inline unsigned long to_ulong_checked(const Int& v, const char* what) {
  if (v < 0 || !v.fits_ulong_p())
    throw std::overflow_error(std::string(what) + " out of range: " + v.get_str());
  return v.get_ui();
}

}  // namespace mclat
