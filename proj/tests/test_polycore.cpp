#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sosq/nonneg.hpp"
#include "sosq/sturm.hpp"
#include "sosq/unipoly.hpp"

using namespace sosq;

namespace {

UniPoly upoly(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return UniPoly(std::move(c));
}

UniPoly random_poly(std::mt19937_64& rng, int max_deg, long coeff_range) {
  std::uniform_int_distribution<int> dd(0, max_deg);
  std::uniform_int_distribution<long> dc(-coeff_range, coeff_range);
  std::uniform_int_distribution<long> dden(1, 4);
  int d = dd(rng);
  std::vector<Rational> c(static_cast<size_t>(d) + 1);
  for (auto& v : c) v = rat(dc(rng), dden(rng));
  return UniPoly(std::move(c));
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(rat_str(rat_from_string("1/2")) == "1/2");
  CHECK(rat_from_string("-6/4") == rat(-3, 2));
  CHECK(rat_str(Rational(5)) == "5");
  CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
  CHECK(ceil_log2_inverse(rat(1, 8)) == 3);
  CHECK(ceil_log2_inverse(rat(1, 5)) == 3);
  CHECK(ceil_log2_inverse(Rational(1)) == 0);
}

TEST_CASE("chebyshev recurrence base cases and values") {
  CHECK(cheb_poly(0) == upoly({1}));
  CHECK(cheb_poly(1) == upoly({0, 1}));
  CHECK(cheb_poly(2) == upoly({-1, 0, 2}));
  CHECK(cheb_poly(3) == upoly({0, -3, 0, 4}));
  for (int d = 0; d <= 64; ++d) {
    CHECK(cheb_poly(d).eval(Rational(1)) == 1);
  }
}

TEST_CASE("chebyshev bounded on [-1,1] at rational samples") {
  for (int d : {1, 2, 3, 5, 8, 13}) {
    UniPoly t = cheb_poly(d);
    for (int i = -100; i <= 100; ++i) {
      Rational z = rat(i, 100);
      CHECK(rat_abs(t.eval(z)) <= 1);
    }
  }
}

TEST_CASE("falling factorial") {
  CHECK(falling_factorial(0) == upoly({1}));
  CHECK(falling_factorial(3) == upoly({0, 2, -3, 1}));
  CHECK(falling_factorial(2).eval(Rational(5)) == 20);
}

TEST_CASE("lagrange basis") {
  CHECK(lagrange_basis(1, 0) == upoly({1, -1}));
  CHECK(lagrange_basis(1, 0).eval(rat(1, 2)) == rat(1, 2));
  UniPoly l21 = lagrange_basis(2, 1);
  CHECK(l21.eval(Rational(1)) == 1);
  CHECK(l21.eval(Rational(0)) == 0);
  CHECK(l21.eval(Rational(2)) == 0);
  CHECK(l21 == upoly({0, 2, -1}));
  CHECK(lagrange_basis(3, 1).eval(rat(3, 2)) == rat(9, 16));
  CHECK_THROWS_AS(lagrange_basis(3, 4), std::invalid_argument);
}

TEST_CASE("polynomial division") {
  auto [q1, r1] = poly_divide(upoly({-1, 0, 1}), upoly({-1, 1}));
  CHECK(q1 == upoly({1, 1}));
  CHECK(r1.is_zero());

  // (z(z-1)+1/4) / (z-1/2) = (z-1/2, 0)
  UniPoly num(std::vector<Rational>{rat(1, 4), Rational(-1), Rational(1)});
  UniPoly half(std::vector<Rational>{rat(-1, 2), Rational(1)});
  auto [q2, r2] = poly_divide(num, half);
  CHECK(q2 == half);
  CHECK(r2.is_zero());

  auto [q3, r3] = poly_divide(upoly({0, 0, 0, 1}), upoly({0, 0, 1}));
  CHECK(q3 == upoly({0, 1}));
  CHECK(r3.is_zero());

  CHECK_THROWS_AS(poly_divide(upoly({1}), UniPoly::zero()), std::invalid_argument);
}

TEST_CASE("polynomial division round trip on random inputs") {
  std::mt19937_64 rng(12345);
  for (int iter = 0; iter < 200; ++iter) {
    UniPoly num = random_poly(rng, 9, 6);
    UniPoly den = random_poly(rng, 5, 6);
    if (den.is_zero()) continue;
    auto [q, r] = poly_divide(num, den);
    CHECK(q * den + r == num);
    CHECK(r.degree() < den.degree());
  }
}

TEST_CASE("compose, shift, even half") {
  UniPoly p = upoly({1, 2, 3});
  UniPoly shifted = p.shift(rat(1, 2));
  CHECK(shifted.eval(Rational(0)) == p.eval(rat(1, 2)));
  CHECK(shifted.eval(Rational(2)) == p.eval(rat(5, 2)));
  UniPoly affine = p.compose_affine(Rational(-2), Rational(3));
  CHECK(affine.eval(Rational(1)) == p.eval(Rational(1)));
  CHECK(affine.eval(Rational(0)) == p.eval(Rational(3)));
  UniPoly sq = p.substitute_square();
  CHECK(sq.even_half() == p);
  CHECK(sq.eval(Rational(2)) == p.eval(Rational(4)));
}

TEST_CASE("sturm root counting on known polynomials") {
  // (z-1)(z-2)(z-3)
  UniPoly p = (UniPoly::variable() - upoly({1})) * (UniPoly::variable() - upoly({2})) *
              (UniPoly::variable() - upoly({3}));
  CHECK(count_real_roots(p) == 3);
  CHECK(count_real_roots(upoly({1, 0, 1})) == 0);
  CHECK(count_real_roots(upoly({-5, 1})) == 1);
  // double root counts once
  CHECK(count_real_roots(upoly({1, -2, 1})) == 1);
  CHECK(count_real_roots_in(p, rat(3, 2), Rational(3)) == 2);  // (3/2, 3]
  CHECK(count_real_roots_in(p, rat(1, 2), Rational(3)) == 3);
  CHECK(count_real_roots_in(p, std::optional<Rational>(), Rational(2)) == 2);
  CHECK(count_roots_open_halfline(p, Rational(2), /*left=*/true) == 1);
  CHECK(count_roots_open_halfline(p, Rational(2), /*left=*/false) == 1);
}

TEST_CASE("sturm counting matches naive sign scanning on random polys") {
  std::mt19937_64 rng(777);
  for (int iter = 0; iter < 100; ++iter) {
    UniPoly p = random_poly(rng, 8, 5);
    if (p.degree() < 1) continue;
    long total = count_real_roots(p);
    // count roots in (-10, 10] by Sturm and compare against interval sums
    long inside = count_real_roots_in(p, Rational(-10), Rational(10));
    if (p.eval(Rational(-10)) == 0 || p.eval(Rational(10)) == 0) continue;
    CHECK(inside <= total);
    long left = count_real_roots_in(p, std::optional<Rational>(), Rational(-10));
    long right = count_real_roots_in(p, Rational(10), std::optional<Rational>());
    CHECK(left + inside + right == total);
  }
}

TEST_CASE("squarefree decomposition") {
  // p = (z-1)^2 (z+2)
  UniPoly p = (UniPoly::variable() - upoly({1})).pow(2) * (UniPoly::variable() + upoly({2}));
  SquarefreeDecomp dec = squarefree_decompose(p);
  REQUIRE(dec.factors.size() == 2);
  CHECK(dec.factors[0] == upoly({2, 1}));
  CHECK(dec.factors[1] == upoly({-1, 1}));
  CHECK(dec.content == 1);
  UniPoly rebuilt = UniPoly::constant(dec.content);
  for (size_t i = 0; i < dec.factors.size(); ++i) {
    for (size_t e = 0; e <= i; ++e) rebuilt = rebuilt * dec.factors[i];
  }
  CHECK(rebuilt == p);
}

TEST_CASE("squarefree decomposition random round trip") {
  std::mt19937_64 rng(999);
  for (int iter = 0; iter < 60; ++iter) {
    UniPoly a = random_poly(rng, 3, 3);
    UniPoly b = random_poly(rng, 2, 3);
    if (a.degree() < 1 || b.degree() < 1) continue;
    UniPoly p = a * b * b;
    SquarefreeDecomp dec = squarefree_decompose(p);
    UniPoly rebuilt = UniPoly::constant(dec.content);
    for (size_t i = 0; i < dec.factors.size(); ++i) {
      for (size_t e = 0; e <= i; ++e) rebuilt = rebuilt * dec.factors[i];
    }
    CHECK(rebuilt == p);
  }
}

TEST_CASE("certify_nonneg basic examples") {
  // z^2 -> accept
  auto r1 = certify_nonneg(upoly({0, 0, 1}));
  CHECK(r1.accepted());
  CHECK(nonneg_cert_matches(*r1.cert, upoly({0, 0, 1})));

  // z^2 - 1 -> reject with a sign change bracket
  auto r2 = certify_nonneg(upoly({-1, 0, 1}));
  CHECK(!r2.accepted());
  REQUIRE(r2.failure.has_value());
  CHECK(upoly({-1, 0, 1}).eval(r2.failure->sample) < 0);

  // (z^2-2)^2 -> accept, odd part constant
  UniPoly p = upoly({-2, 0, 1}).pow(2);
  auto r3 = certify_nonneg(p);
  CHECK(r3.accepted());
  CHECK(r3.cert->even_part == upoly({-2, 0, 1}));
  CHECK(nonneg_cert_matches(*r3.cert, p));

  // zero polynomial accepted
  CHECK(certify_nonneg(UniPoly::zero()).accepted());
  // negative constant rejected
  CHECK(!certify_nonneg(upoly({-3})).accepted());
  // odd degree rejected
  auto r4 = certify_nonneg(upoly({0, 0, 0, 2}));
  CHECK(!r4.accepted());
  CHECK(upoly({0, 0, 0, 2}).eval(r4.failure->sample) < 0);
}

TEST_CASE("certify_nonneg agrees with dense sign sampling") {
  std::mt19937_64 rng(4242);
  for (int iter = 0; iter < 120; ++iter) {
    UniPoly p = random_poly(rng, 12, 4);
    auto res = certify_nonneg(p);
    bool sampled_negative = false;
    for (int i = -500; i <= 500 && !sampled_negative; ++i) {
      if (sign(p.eval(rat(i, 50))) < 0) sampled_negative = true;
    }
    if (res.accepted()) {
      CHECK(!sampled_negative);
      CHECK(nonneg_cert_matches(*res.cert, p));
    } else {
      CHECK(sign(p.eval(res.failure->sample)) < 0);
    }
    // force some accepted cases too
    UniPoly sq = p * p;
    auto res2 = certify_nonneg(sq);
    CHECK(res2.accepted());
    CHECK(nonneg_cert_matches(*res2.cert, sq));
  }
}

TEST_CASE("certify_nonneg_squared_affine matches direct certification") {
  std::mt19937_64 rng(31337);
  for (int iter = 0; iter < 60; ++iter) {
    UniPoly ghat = random_poly(rng, 6, 4);
    if (ghat.is_zero()) continue;
    Rational slope = rat((iter % 2) ? 1 : -1, 2);
    Rational intercept = rat(iter % 5 - 2, 3);
    ComposedCert cc = certify_nonneg_squared_affine(ghat, slope, intercept);
    UniPoly direct = ghat.compose_affine(slope, intercept).substitute_square();
    CHECK(cc.p == direct);
    auto ref = certify_nonneg(direct);
    CHECK(cc.result.accepted() == ref.accepted());
    if (cc.result.accepted()) {
      CHECK(nonneg_cert_matches(*cc.result.cert, direct));
    } else {
      CHECK(sign(direct.eval(cc.result.failure->sample)) < 0);
    }
  }
}

TEST_CASE("sos_two_squares examples") {
  // z^2 + 1 = z^2 + 1^2
  auto t1 = sos_two_squares(upoly({1, 0, 1}), rat(1, 1000000));
  CHECK(t1.converged);
  CHECK(t1.residual_bound == 0);
  CHECK(upoly({1, 0, 1}) - t1.a * t1.a - t1.b * t1.b == UniPoly::zero());

  // (z^2-2)^2
  UniPoly p2 = upoly({-2, 0, 1}).pow(2);
  auto t2 = sos_two_squares(p2, rat(1, 1000000));
  CHECK(t2.converged);
  CHECK(t2.residual_bound == 0);

  // z^4 + 1 = (z^2-1)^2 + 2 z^2 needs an irrational split; small residual only
  auto t3 = sos_two_squares(upoly({1, 0, 0, 0, 1}), rat(1, 1000));
  CHECK(t3.converged);
  UniPoly res = upoly({1, 0, 0, 0, 1}) - t3.a * t3.a - t3.b * t3.b;
  for (int i = 0; i <= std::max(res.degree(), 0); ++i) {
    CHECK(rat_abs(res.coeff(i)) <= t3.residual_bound);
  }
}
