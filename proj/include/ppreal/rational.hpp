#pragma once

#include <gmpxx.h>

#include <string>

namespace ppreal {

/// Exact rational number. Every length, coordinate and distance in the
/// realization modules is one of these; nothing is ever rounded.
using Rational = mpq_class;

inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Largest integer <= r.
inline long floor_of(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q.get_si();
}

}  // namespace ppreal
