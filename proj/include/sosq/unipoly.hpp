#pragma once

// Dense univariate polynomials over Rational. Trailing zero coefficients
// are always trimmed; the zero polynomial has an empty coefficient vector
// and degree kNegInfDegree (a -inf sentinel, deliberately not -1).

#include <climits>
#include <string>
#include <utility>
#include <vector>

#include "sosq/rational.hpp"

namespace sosq {

constexpr int kNegInfDegree = INT_MIN;

class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly zero() { return UniPoly(); }
  static UniPoly constant(const Rational& c);
  // coeff * z^d
  static UniPoly monomial(int d, const Rational& coeff);
  static UniPoly variable() { return monomial(1, Rational(1)); }

  int degree() const { return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  // Coefficient of z^i (zero outside the stored range).
  const Rational& coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const;

  Rational eval(const Rational& z) const;

  UniPoly derivative() const;
  UniPoly operator-() const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rational& s) const;
  UniPoly operator/(const Rational& s) const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return c_ != o.c_; }

  UniPoly pow(unsigned long e) const;

  // this(inner(z)); cost O(deg(this) * deg(result)) coefficient ops.
  UniPoly compose(const UniPoly& inner) const;
  // this(z + a), Taylor shift.
  UniPoly shift(const Rational& a) const;
  // this(a*z + b) without building an inner polynomial explicitly.
  UniPoly compose_affine(const Rational& a, const Rational& b) const;
  // q(z) with this(z) == q(z^2); throws unless all odd coefficients vanish.
  UniPoly even_half() const;
  // this(z^2).
  UniPoly substitute_square() const;

  std::string str(const std::string& var = "z") const;

  // Integer form: coeffs*den == this with integer content coprime.
  struct ZForm {
    std::vector<Int> coeffs;
    Int den;
  };
  ZForm to_integer() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

inline UniPoly operator*(const Rational& s, const UniPoly& p) { return p * s; }

// quotient/remainder with num == quot*den + rem, deg(rem) < deg(den).
// Throws std::invalid_argument on zero divisor.
std::pair<UniPoly, UniPoly> poly_divide(const UniPoly& num, const UniPoly& den);

// Chebyshev polynomial of the first kind, by the three-term recurrence.
UniPoly cheb_poly(int d);
// z (z-1) ... (z-k+1); k = 0 gives 1.
UniPoly falling_factorial(int k);
// Degree-n interpolation basis polynomial: 1 at k, 0 on {0..n}\{k}.
UniPoly lagrange_basis(int n, int k);

// Evaluate the integer form at an integer point: returns P(x) where
// poly == P/den. Plain integer Horner.
Int zform_eval(const std::vector<Int>& coeffs, const Int& x);

}  // namespace sosq
