#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace indset {

// Exact rational arithmetic for bound values. Degrees and weights are
// integers, so every bound in this library has an exact representation;
// conversion to double happens only at the reporting boundary.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(const mpz_class& num, const mpz_class& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace indset
