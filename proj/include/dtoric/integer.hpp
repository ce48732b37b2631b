#pragma once

#include <gmpxx.h>

#include <string>

namespace dtoric {

using Int = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Int& v) { return v.get_str(); }

// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& v) {
  mpq_class c(v);
  c.canonicalize();
  return c.get_str();
}

// Accepts "p" or "p/q"; throws dtoric::Error on malformed text.
Rational parse_rational(const std::string& text);

// Floor division for arbitrary precision integers (rounds toward -infinity).
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int abs(const Int& a) {
  Int r;
  mpz_abs(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool divides(const Int& d, const Int& a) {
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

}  // namespace dtoric
