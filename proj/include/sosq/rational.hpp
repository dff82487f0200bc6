#pragma once

// Exact arbitrary-precision arithmetic. All certificate math in this
// library runs on Rational; floating point is allowed only in display
// fields and in the numeric two-squares witness.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sosq {

using Int = mpz_class;
using Rational = mpq_class;

// Parses "p", "p/q" or a decimal string like "-3". Throws on malformed
// input or zero denominator. Result is canonical (reduced, den > 0).
Rational rat_from_string(const std::string& s);

// Builds num/den in canonical form.
Rational rat(const Int& num, const Int& den);
inline Rational rat(long num, long den) { return rat(Int(num), Int(den)); }

// "p/q", or just "p" when q == 1.
std::string rat_str(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }
inline Rational rat_abs(const Rational& q) { return abs(q); }

Rational rat_pow(const Rational& base, long e);
Int int_pow(const Int& base, unsigned long e);

Int binomial(unsigned long n, unsigned long k);
Int factorial(unsigned long n);

// floor(q) as an integer.
Int rat_floor(const Rational& q);
Int rat_ceil(const Rational& q);

// Smallest m >= 0 with 2^m >= 1/q, for q in (0,1]. Exact.
long ceil_log2_inverse(const Rational& q);

// Integer square root bounds: lo*lo <= v < (lo+1)*(lo+1).
Int isqrt_floor(const Int& v);

// True iff q is the square of a rational, and if so stores the root.
bool rat_is_square(const Rational& q, Rational* root = nullptr);

double rat_to_double(const Rational& q);

}  // namespace sosq
