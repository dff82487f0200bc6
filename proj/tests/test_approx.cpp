#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sosq/approx.hpp"
#include "sosq/symfun.hpp"

using namespace sosq;

TEST_CASE("ln bounds are rigorous") {
  for (long num : {2L, 3L, 10L, 100L}) {
    RatInterval iv = ln_bounds(Rational(num), rat(1, 1 << 20));
    double lo = rat_to_double(iv.lo), hi = rat_to_double(iv.hi);
    double truth = std::log(static_cast<double>(num));
    CHECK(lo <= truth);
    CHECK(hi >= truth - 1e-12);
    CHECK(hi - lo <= 1.0 / (1 << 20));
  }
  RatInterval half = ln_bounds(rat(1, 2), rat(1, 1024));
  CHECK(rat_to_double(half.hi) < 0);
}

TEST_CASE("sqrt bounds bracket") {
  for (long v : {2L, 3L, 513L, 1025L}) {
    RatInterval iv = sqrt_bounds(Rational(v), 32);
    CHECK(iv.lo * iv.lo <= v);
    CHECK(iv.hi * iv.hi >= v);
  }
}

TEST_CASE("middle_d_star spec example") {
  // n=9, eps=1/4, a^2=1/2: smallest even d >= 2 with T_d(1+mu) >= 1 is 2.
  CHECK(middle_d_star(9, rat(1, 4), rat(1, 2)) == 2);
  // larger threshold pushes the degree up
  CHECK(middle_d_star(9, rat(1, 16), rat(1, 2)) > 2);
}

TEST_CASE("middle_poly endpoint values and properties at a small valid n") {
  // smallest n admitted by the a^2 range is 32 (a^2 = 1/2 = n/64)
  MiddleParams mp{32, rat(1, 4), rat(1, 2)};
  MiddleResult mr = middle_poly(mp, 64);
  CHECK(mr.prop1_ok);
  CHECK(mr.prop2_ok);
  CHECK(mr.prop3_ok);
  CHECK(mr.degree_bound_ok);
  CHECK(mr.d_star % 2 == 0);
  CHECK(mr.p.degree() == 2 * mr.d_star);
  // p(z)^2 = a^2 gives p = eps exactly (s(a^2) = 1, T(1) = 1): check via the
  // even structure p(z) = P(z^2) at y = a^2.
  UniPoly half = mr.p.even_half();
  CHECK(half.eval(mp.a_sq) == mp.eps);
  // at z = n/2: s = -1, even degree, T = 1
  CHECK(half.eval(rat(32 * 32, 4)) == mp.eps);
  // certificate matches p - 1/4 + z^2
  UniPoly g = mr.p + UniPoly::monomial(2, Rational(1)) - UniPoly::constant(rat(1, 4));
  CHECK(nonneg_cert_matches(mr.cert, g));

  CHECK_THROWS_AS(middle_poly(MiddleParams{9, rat(1, 4), rat(1, 2)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(middle_poly(MiddleParams{64, rat(1, 2), rat(1, 2)}),
                  std::invalid_argument);
}

TEST_CASE("l1_approx_build rejects out-of-range inputs") {
  CHECK_THROWS_AS(l1_approx_build(512, rat(1, 4)), std::invalid_argument);  // even n
  CHECK_THROWS_AS(l1_approx_build(511, rat(1, 4)), std::invalid_argument);  // delta too small
  CHECK_THROWS_AS(l1_approx_build(513, rat(1, 3)), std::invalid_argument);  // delta too large
}

TEST_CASE("l1_approx_build on the smallest admissible instance" * doctest::timeout(600)) {
  L1Cert cert = l1_approx_build(513, rat(1, 4));
  CHECK(cert.l1_ok);
  CHECK(cert.degree_ok);
  CHECK(cert.l1_error <= rat(1, 4) * rat_pow(Rational(2), 513));
  CHECK(cert.h.degree() == 2 * cert.degree_bound);
  CHECK(nonneg_cert_matches(cert.nonneg, cert.h));
  // error at the center point i = (n-1)/2 equals p(-1/2) in [1/4, 2]
  UniPoly f = fk_poly(513, 256);
  Rational center_err = cert.h.eval(Rational(256)) - f.eval(Rational(256));
  CHECK(center_err >= rat(1, 4));
  CHECK(center_err <= 2);
  // type-I points: per-point error <= eps = delta/2 at a far integer
  Rational far_err = rat_abs(cert.h.eval(Rational(100)) - f.eval(Rational(100)));
  CHECK(far_err <= rat(1, 8));
}

TEST_CASE("sampling_expected_poly exhaustive and empty cases") {
  int n = 10, k = 2;
  UniPoly f = fk_poly(n, k);
  // q = n and leaf values f_k(j): the polynomial is f_k itself, l1 = 0
  std::vector<Rational> leaves;
  for (int j = 0; j <= n; ++j) leaves.push_back(f.eval(Rational(j)));
  UniPoly h = sampling_expected_poly(n, n, leaves);
  CHECK(hyper_error(h, f, n).second == 0);

  // accept-nothing: h == 0 and l1 = sum binom f_k
  SamplingResult empty = sampling_approx_build(n, k, rat(1, 8), 1, Rational(5), Rational(-1));
  CHECK(empty.h.is_zero());
  Rational expect(0);
  for (int w = 0; w <= n; ++w) {
    expect += Rational(binomial(n, static_cast<unsigned long>(w))) * f.eval(Rational(w));
  }
  CHECK(empty.l1_direct == expect);
}

TEST_CASE("sampling polynomial stays within [0, V] on integer weights") {
  SamplingResult s = sampling_approx_build(20, 4, rat(1, 8), 2);
  CHECK(s.queries == 6);
  for (int w = 0; w <= 20; ++w) {
    Rational v = s.h.eval(Rational(w));
    CHECK(v >= 0);
    CHECK(v <= s.big_value);
  }
}

TEST_CASE("tuned sampling run keeps the induced l1 cost below delta 2^n") {
  // The paper's footnote sketch: the sampling polynomial is the correction
  // added to f_k, so its own weighted mass is the l1 price of the
  // approximation f_k + h. Tuned (V, tau) keep it below delta 2^n.
  int n = 20, k = 4;
  Rational delta = rat(1, 8);
  SamplingResult s =
      sampling_approx_build(n, k, delta, 2, Rational(1), rat(1, 24));
  CHECK(s.l1_induced <= delta * rat_pow(Rational(2), n));
  CHECK(s.l1_induced > 0);
}
