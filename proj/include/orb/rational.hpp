#ifndef ORB_RATIONAL_HPP
#define ORB_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace orb {

// Exact arbitrary-precision arithmetic is delegated to GMP.  mpq_class keeps
// the canonical form gcd(|num|, den) = 1, den >= 1 after every operation.
using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_one(const Rational& r) { return r == 1; }

Rational rational_from_string(const std::string& text);
std::string to_string(const Rational& r);

inline Rational coeff_zero(const Rational&) { return Rational(0); }
inline Rational coeff_one(const Rational&) { return Rational(1); }
inline bool coeff_is_zero(const Rational& r) { return is_zero(r); }

long integer_gcd(long a, long b);
long integer_lcm(long a, long b);

} // namespace orb

#endif
