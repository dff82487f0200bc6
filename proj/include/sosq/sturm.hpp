#pragma once

// Exact real-root counting via Sturm sequences. The sequences are computed
// fraction-free over the integers with subresultant (Collins) size control,
// streaming two elements at a time so that high-degree inputs stay within
// memory. Each stored element is a positive multiple of the classic Sturm
// chain element, so sign-variation counts match the textbook theorem.

#include <optional>
#include <vector>

#include "sosq/unipoly.hpp"

namespace sosq {

struct SturmPoint {
  enum class Kind { neg_inf, pos_inf, finite };
  Kind kind = Kind::finite;
  Rational x;

  static SturmPoint neg_inf() { return {Kind::neg_inf, Rational(0)}; }
  static SturmPoint pos_inf() { return {Kind::pos_inf, Rational(0)}; }
  static SturmPoint at(const Rational& v) { return {Kind::finite, v}; }
};

struct PrsScan {
  // signs[i][j]: sign of PRS element i at point j.
  std::vector<std::vector<int>> signs;
  // Primitive part of the last nonzero element (gcd of the inputs up to a
  // positive constant), positive leading coefficient.
  UniPoly last;
  // Sign variations per point (ignoring zeros).
  std::vector<long> variations;
};

// PRS of (a, b) with the Sturm negation convention.
PrsScan prs_scan(const UniPoly& a, const UniPoly& b, const std::vector<SturmPoint>& pts);

// gcd over Q, normalized to a primitive integer polynomial with positive
// leading coefficient. gcd(0,0) = 0.
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

// Number of distinct real roots.
long count_real_roots(const UniPoly& p);

// Distinct real roots in (lo, hi]; unset bounds mean -inf / +inf.
// Requires p nonzero at finite endpoints.
long count_real_roots_in(const UniPoly& p, const std::optional<Rational>& lo,
                         const std::optional<Rational>& hi);

// Distinct real roots strictly on one side of u0: (-inf, u0) or (u0, +inf).
// Roots at u0 itself are excluded (the polynomial is deflated first).
long count_roots_open_halfline(const UniPoly& p, const Rational& u0, bool left_side);

// Yun squarefree decomposition: p = content * prod factors[i]^(i+1) with
// factors primitive integer, positive leading coefficient, pairwise coprime
// and squarefree (entries may be constant 1 when a multiplicity is absent).
struct SquarefreeDecomp {
  Rational content;
  std::vector<UniPoly> factors;  // factors[i] has multiplicity i+1
};
SquarefreeDecomp squarefree_decompose(const UniPoly& p);

// 1 + max |c_i / lc|: all real roots lie in (-B, B).
Rational cauchy_root_bound(const UniPoly& p);

}  // namespace sosq
