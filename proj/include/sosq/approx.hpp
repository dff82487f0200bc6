#pragma once

// Chebyshev-based sos approximations: the "middle" polynomial that dominates
// 1/4 - z^2 while staying small on the integer range, the l_1 certificate
// for f_{floor(n/2)} built from it, and the classical-sampling expected
// polynomial for k below n/2.

#include <optional>
#include <vector>

#include "sosq/nonneg.hpp"
#include "sosq/unipoly.hpp"

namespace sosq {

struct RatInterval {
  Rational lo, hi;
};

// Rigorous rational enclosure of ln(w), w > 0, with hi - lo <= max_gap.
RatInterval ln_bounds(const Rational& w, const Rational& max_gap);

// Rational enclosure of sqrt(v), v >= 0, with 2^-bits granularity.
RatInterval sqrt_bounds(const Rational& v, int bits);

struct MiddleParams {
  int n = 0;
  Rational eps;   // in (0, 1/4]
  Rational a_sq;  // a^2, rational; a itself is usually irrational
};

// Least even d >= 2 with T_d(1 + mu) >= 1/(4 eps), mu = 2(a^2-1/4)/(L^2-a^2).
long middle_d_star(int n, const Rational& eps, const Rational& a_sq);

struct MiddleResult {
  UniPoly p;  // eps T_{d*}(s(z^2))
  long d_star = 0;
  NonnegCert cert;  // nonnegativity certificate for p(z) - 1/4 + z^2
  bool prop1_ok = false;   // p >= 1/4 - z^2 globally (certified)
  bool prop2_ok = false;   // |p| <= eps on a^2 <= z^2 <= n^2/4 (integers + samples)
  bool prop3_ok = false;   // |p| <= 2 on 1/4 <= z^2 <= n^2/4 (integers + samples)
  bool degree_bound_ok = false;  // d* <= ceil(3n ln(1/2eps) / (4 sqrt2 a)) + 1
  long integer_points = 0;
  long rational_samples = 0;
};

// Requires the theorem regime 1/2 <= a_sq <= n/64 (so n >= 32), eps in (0,1/4].
MiddleResult middle_poly(const MiddleParams& params, int rational_samples = 128);

struct L1Cert {
  int n = 0;
  Rational delta;
  UniPoly h;              // globally nonnegative, h(|x|) approximates f_k
  long degree_bound = 0;  // sos half-degree (= d*)
  Rational l1_error;      // sum_i binom(n,i) |h(i) - f(i)|, exact
  NonnegCert nonneg;      // certificate for h
  Rational eps_used, a_sq_used;
  bool l1_ok = false;      // l1_error <= delta 2^n
  bool degree_ok = false;  // degree_bound <= ceil(3 sqrt(n) ln(1/delta) / (sqrt2 delta))
};

// n odd with 8/sqrt(2n) <= delta <= 1/4. eps = delta/2; a^2 starts at the
// delta^2 n / 64 default and is nudged upward when the exact half-degree
// target requires it (both final checks are exact either way).
L1Cert l1_approx_build(int n, const Rational& delta);

// Exact expected-output polynomial of a q-query sampling tree:
// h(w) = sum_j leaf[j] C(w,j) C(n-w, q-j) / C(n,q).
UniPoly sampling_expected_poly(int n, int q, const std::vector<Rational>& leaf_values);

struct SamplingResult {
  UniPoly h;           // V * Pr[accept | weight], degree q
  long queries = 0;    // q
  Rational big_value;  // V
  Rational threshold;  // tau
  Rational l1_direct;   // sum_w binom |h(w) - f_k(w)|
  Rational l1_induced;  // sum_w binom |h(w)|: the l1 cost of f_k + h
};

// Classical sampling approximation for k < 0.49 n; q = c_queries * ceil(ln(1/delta))
// distinct random indices, output V when the observed ones-ratio is within
// tau of k/n. Defaults: V = n^2/4, tau = 1/(2q).
SamplingResult sampling_approx_build(int n, int k, const Rational& delta, int c_queries,
                                     std::optional<Rational> big_value = std::nullopt,
                                     std::optional<Rational> threshold = std::nullopt);

}  // namespace sosq
