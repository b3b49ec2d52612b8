#ifndef CAPELLI_RATIONAL_HPP
#define CAPELLI_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "capelli/error.hpp"

namespace capelli {

/// The universal scalar: an arbitrary-precision rational in canonical form
/// (gcd(|num|, den) = 1, den > 0, zero is 0/1).  GMP's mpq_class maintains
/// exactly this invariant, so we use it directly.
using Rational = mpq_class;

/// Parse "p/q" or "p" (decimal).  Accepts an optional leading '-'.
inline Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw Error("BAD_REQUEST", "empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw Error("BAD_REQUEST", "cannot parse rational '" + s + "'");
  if (q.get_den() == 0)
    throw Error("BAD_REQUEST", "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

/// Canonical form "p/q", with "/q" omitted when q = 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Canonical fraction num/den.  Always use this instead of the two-argument
/// mpq_class constructor: mpq_class(n, d) does NOT reduce, and GMP's
/// comparisons assume reduced form.
inline Rational frac(long num, long den) {
  if (den == 0) throw Error("BAD_REQUEST", "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational rational_pow(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) throw Error("BAD_REQUEST", "0 raised to a negative power");
    return rational_pow(Rational(1) / base, -e);
  }
  Rational result(1), b = base;
  long k = e;
  while (k > 0) {
    if (k & 1) result *= b;
    b *= b;
    k >>= 1;
  }
  return result;
}

inline Rational factorial(long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

inline mpz_class binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return b;
}

/// Reduced numerator/denominator access used by the admissibility tests.
inline mpz_class numerator(const Rational& r) { return r.get_num(); }
inline mpz_class denominator(const Rational& r) { return r.get_den(); }

using RationalVector = std::vector<Rational>;

} // namespace capelli

#endif
