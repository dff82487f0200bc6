#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sosq/multipoly.hpp"
#include "sosq/symfun.hpp"

using namespace sosq;

namespace {

MultiPoly random_multipoly(std::mt19937_64& rng, int n, int max_deg, int max_terms) {
  std::uniform_int_distribution<int> dt(1, max_terms);
  std::uniform_int_distribution<int> dv(0, n - 1);
  std::uniform_int_distribution<int> dd(0, max_deg);
  std::uniform_int_distribution<long> dc(-4, 4);
  std::vector<std::pair<MultiPoly::Exp, Rational>> raw;
  int terms = dt(rng);
  for (int t = 0; t < terms; ++t) {
    MultiPoly::Exp e(static_cast<size_t>(n), 0);
    int deg = dd(rng);
    for (int j = 0; j < deg; ++j) {
      int v = dv(rng);
      if (e[static_cast<size_t>(v)] < 3) e[static_cast<size_t>(v)]++;
    }
    raw.emplace_back(std::move(e), Rational(dc(rng)));
  }
  return MultiPoly::from_terms(n, std::move(raw));
}

std::vector<Rational> cube_point(int n, unsigned mask) {
  std::vector<Rational> pt(static_cast<size_t>(n), Rational(0));
  for (int i = 0; i < n; ++i) {
    if (mask & (1u << i)) pt[static_cast<size_t>(i)] = 1;
  }
  return pt;
}

}  // namespace

TEST_CASE("reduce_multilinear examples") {
  int n = 2;
  MultiPoly x1 = MultiPoly::variable(n, 0);
  MultiPoly x2 = MultiPoly::variable(n, 1);
  CHECK((x1 * x1).reduce_multilinear() == x1);
  MultiPoly p = x1 * x1 * x2 * x2 - x1 * x2;
  CHECK(p.reduce_multilinear().is_zero());
  MultiPoly q = (x1 + x2) * (x1 + x2);
  MultiPoly expect = x1 + x2 + x1 * x2 * Rational(2);
  CHECK(q.reduce_multilinear() == expect);
}

TEST_CASE("reduce_multilinear equals original on the cube") {
  std::mt19937_64 rng(101);
  for (int n = 1; n <= 6; ++n) {
    for (int iter = 0; iter < 20; ++iter) {
      MultiPoly p = random_multipoly(rng, n, 4, 6);
      MultiPoly r = p.reduce_multilinear();
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        auto pt = cube_point(n, mask);
        CHECK(p.eval(pt) == r.eval(pt));
      }
    }
  }
}

TEST_CASE("symmetrize examples") {
  int n = 2;
  MultiPoly x1 = MultiPoly::variable(n, 0);
  MultiPoly x2 = MultiPoly::variable(n, 1);
  CHECK(symmetrize(x1) == (x1 + x2) * rat(1, 2));
  CHECK(symmetrize(x1 * x2) == x1 * x2);
  MultiPoly p3 = MultiPoly::variable(3, 0) * MultiPoly::variable(3, 1);
  MultiPoly expect = (MultiPoly::variable(3, 0) * MultiPoly::variable(3, 1) +
                      MultiPoly::variable(3, 0) * MultiPoly::variable(3, 2) +
                      MultiPoly::variable(3, 1) * MultiPoly::variable(3, 2)) *
                     rat(1, 3);
  CHECK(symmetrize(p3) == expect);
}

TEST_CASE("sym_uni examples") {
  CHECK(sym_uni(MultiPoly::constant(3, Rational(1))) == UniPoly::constant(Rational(1)));
  // n=3: x1 x2 -> z(z-1)/6
  MultiPoly p = MultiPoly::variable(3, 0) * MultiPoly::variable(3, 1);
  UniPoly expect = falling_factorial(2) / Rational(6);
  CHECK(sym_uni(p) == expect);
  MultiPoly anti = MultiPoly::variable(3, 0) - MultiPoly::variable(3, 1);
  CHECK(sym_uni(anti).is_zero());
}

TEST_CASE("sym_uni equals weight averages, symmetrize idempotent through sym_uni") {
  std::mt19937_64 rng(2024);
  for (int n = 2; n <= 6; ++n) {
    for (int iter = 0; iter < 10; ++iter) {
      MultiPoly p = random_multipoly(rng, n, 3, 5);
      UniPoly u = sym_uni(p);
      for (int w = 0; w <= n; ++w) {
        CHECK(u.eval(Rational(w)) == average_on_weight(p, w));
      }
      CHECK(sym_uni(symmetrize(p)) == u);
    }
  }
}

TEST_CASE("fk_poly") {
  UniPoly f = fk_poly(5, 1);
  CHECK(f.eval(Rational(1)) == 0);
  CHECK(f.eval(Rational(2)) == 0);
  CHECK(f.eval(Rational(0)) == 2);
  CHECK_THROWS_AS(fk_poly(3, 3), std::invalid_argument);
  // flip identity f_k(z) = f_{n-k-1}(n-z) on integer points
  for (int n = 3; n <= 8; ++n) {
    for (int k = 0; k < n; ++k) {
      UniPoly a = fk_poly(n, k);
      UniPoly b = fk_poly(n, n - k - 1);
      for (int z = 0; z <= n; ++z) {
        CHECK(a.eval(Rational(z)) == b.eval(Rational(n - z)));
      }
    }
  }
}

TEST_CASE("hyper_error") {
  UniPoly f = fk_poly(3, 1);
  auto [linf0, l10] = hyper_error(f, f, 3);
  CHECK(linf0 == 0);
  CHECK(l10 == 0);

  // h = f + c: linf = |c|, l1 = |c| 2^n
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> dc(-9, 9);
  for (int iter = 0; iter < 20; ++iter) {
    Rational c = rat(dc(rng), 4);
    auto [linf, l1] = hyper_error(f + UniPoly::constant(c), f, 3);
    CHECK(linf == rat_abs(c));
    CHECK(l1 == rat_abs(c) * 8);
  }

  // n=3, h = f1 + z: diffs 0,1,2,3 -> linf 3, l1 12
  auto [linf, l1] = hyper_error(f + UniPoly::variable(), f, 3);
  CHECK(linf == 3);
  CHECK(l1 == 12);
}

TEST_CASE("exponent cap is enforced") {
  MultiPoly x = MultiPoly::variable(1, 0);
  MultiPoly p = MultiPoly::constant(1, Rational(1));
  for (int i = 0; i < MultiPoly::kMaxExponent; ++i) p = p * x;
  CHECK_THROWS_AS(p * x, std::domain_error);
}
