#pragma once

// Dual certificates: the Grigoriev functional G_r (evaluate the symmetrized
// polynomial at r), pseudo-densities built from it, exact moment-matrix sign
// checks, l_1 witnesses, and the Appendix-D error lower bound.

#include <cstdint>
#include <string>
#include <vector>

#include "sosq/symfun.hpp"
#include "sosq/unipoly.hpp"

namespace sosq {

// B_t = r(r-1)...(r-t+1) / (n(n-1)...(n-t+1)); the value of G_r on any
// degree-t multilinear monomial.
Rational grig_B(int n, const Rational& r, int t);

// G_r(p) = Sym^uni(p-bar)(r).
Rational grig_eval(const MultiPoly& p, const Rational& r);

struct GrigReport {
  bool ok = false;
  bool p1_ok = false, p2_ok = false, p3_ok = false, p4_ok = false;
  long p1_checked = 0, p2_trials = 0, p4_trials = 0;
  bool kernel_formula_ok = false;
  std::string detail;
};

// Checks the four functional properties exactly; properties 2 and 4 on
// `trials` seeded random polynomials each. Requires k < r < n-k and
// k+1 <= n/2.
GrigReport grig_property_report(int n, const Rational& r, int k, int trials, uint64_t seed);

struct PseudoDensity {
  int n = 0;
  int degree = 0;  // n-1
  SymProfile profile;
  Rational e_density;  // E[D], must be 1
  Rational e_f;        // E[D f_{floor(n/2)}], must be -1/4
  Rational inf_norm;
  Rational ratio;  // e_f / inf_norm
  bool ratio_below_neg_quarter_sqrt = false;  // ratio < -1/(4 sqrt n), exact
};

// D(x) = 2^n G_{n/2}(delta_x), i.e. profile(w) = 2^n L_w(n/2) / binom(n,w).
PseudoDensity pseudo_density_build(int n);

enum class MomentSign { psd, nsd };

// Moment matrix M[S,T] = E_x[psi(x) x_{S cup T}] over |S|,|T| <= floor(d/2),
// decided by exact LDL. Symmetric profiles with floor(d/2) <= n/2 go through
// the Johnson-scheme block diagonalization; the dense route is kept for
// small sizes and cross-checks.
bool check_moment_sign(const SymProfile& psi, int d, MomentSign want);
bool check_moment_sign_dense(const SymProfile& psi, int d, MomentSign want);

struct Witness {
  int n = 0;
  int d = 0;
  Rational delta;
  SymProfile profile;
};

// Claim-style witness check: ||psi||_inf == 1, E[f psi] > delta, and
// E[p^2 psi] <= 0 for all polynomials p of degree <= d. True implies
// sos-deg_{delta 2^n}(f, l1) > d.
bool witness_check(const Witness& w, const UniPoly& f);

// A(m) = sum_{i=0}^m (binom(2i,i)/4^i)^2, with the step identity checked.
Rational appendix_d_A(int m);

struct LinfLower {
  Rational bound;                 // (4 sum_k |L_k(n/2)|)^{-1}
  Rational lagrange_abs_sum;      // equals A((n-1)/2)
  double asymptotic = 0.0;        // display only
};
LinfLower linf_error_lower(int n);

}  // namespace sosq
