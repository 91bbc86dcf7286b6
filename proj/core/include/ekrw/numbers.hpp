#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ekrw {

/// Exact arbitrary-precision nonnegative count.
using BigCount = mpz_class;
/// Exact arbitrary-precision signed integer.
using BigInt = mpz_class;
/// Exact rational, kept in canonical reduced form by gmp.
using Rational = mpq_class;

/// C(a,b) with the usual conventions: 0 for b < 0 or b > a.  Requires a >= 0;
/// use binomial_signed for generalized (negative) upper index.
inline BigCount binomial(long a, long b) {
  if (a < 0) throw std::domain_error("binomial: negative upper index; use binomial_signed");
  if (b < 0 || b > a) return 0;
  BigCount r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return r;
}

/// Generalized binomial coefficient as a polynomial in the upper index:
/// for a < 0, C(a,b) = (-1)^b C(b-a-1, b).  Zero for b < 0.
inline BigInt binomial_signed(long a, long b) {
  if (b < 0) return 0;
  if (a >= 0) return binomial(a, b);
  BigInt r = binomial(b - a - 1, b);
  if (b % 2 != 0) r = -r;
  return r;
}

inline BigCount pow2(unsigned long e) {
  BigCount r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

inline BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational rational_pow(const Rational& q, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
  r.canonicalize();
  return r;
}

/// Parses "p/q", a plain integer, or a decimal like "0.25" into an exact
/// rational.
Rational parse_rational(const std::string& text);

}  // namespace ekrw
