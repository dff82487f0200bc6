#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sosq/blekherman.hpp"
#include "sosq/symfun.hpp"

using namespace sosq;

namespace {

MultiPoly random_multilinear(std::mt19937_64& rng, int n, int max_deg, int terms) {
  std::uniform_int_distribution<int> dd(0, max_deg);
  std::uniform_int_distribution<long> dc(-3, 3);
  std::uniform_int_distribution<int> dv(0, n - 1);
  std::vector<std::pair<MultiPoly::Exp, Rational>> raw;
  for (int t = 0; t < terms; ++t) {
    MultiPoly::Exp e(static_cast<size_t>(n), 0);
    int deg = dd(rng);
    for (int j = 0; j < deg; ++j) e[static_cast<size_t>(dv(rng))] = 1;
    raw.emplace_back(std::move(e), Rational(dc(rng)));
  }
  return MultiPoly::from_terms(n, std::move(raw));
}

MultiPoly weight_poly_times(const MultiPoly& p, int count, int offset_from) {
  // p * prod_{j=1..count} (|x| - offset_from + j), multilinear-reduced.
  MultiPoly acc = p;
  MultiPoly ws = MultiPoly::weight_sum(p.nvars());
  for (int j = 1; j <= count; ++j) {
    MultiPoly factor = ws - MultiPoly::constant(p.nvars(), Rational(offset_from - j));
    acc = (acc * factor).reduce_multilinear();
  }
  return acc;
}

}  // namespace

TEST_CASE("w_operator shapes and examples") {
  SubsetMatrix w21 = w_operator(2, 1);
  REQUIRE(w21.entries.size() == 1);
  REQUIRE(w21.entries[0].size() == 2);
  CHECK(w21.entries[0][0] == 1);
  CHECK(w21.entries[0][1] == 1);

  SubsetMatrix w32 = w_operator(3, 2);
  for (const auto& row : w32.entries) {
    Rational s(0);
    for (const auto& v : row) s += v;
    CHECK(s == 2);  // each singleton lies in exactly 2 two-subsets
  }

  // W_1 applied to x1 - x2 is zero.
  MultiPoly d = MultiPoly::variable(2, 0) - MultiPoly::variable(2, 1);
  Vec img = mat_vec(w_operator(2, 1).entries, to_level_vector(d, 1));
  for (const auto& c : img) CHECK(c == 0);

  CHECK_THROWS_AS(w_operator(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(w_operator(100, 3), std::length_error);
}

TEST_CASE("W identities with the Johnson adjacency") {
  for (int n = 2; n <= 8; ++n) {
    for (int t = 1; 2 * t <= n + 1; ++t) {
      Mat w = w_operator(n, t).entries;
      Mat wt = mat_transpose(w);
      Mat lhs1 = mat_mul(wt, w);
      Mat rhs1 = mat_add(mat_scale(mat_identity(lhs1.size()), Rational(t)),
                         johnson_adjacency(n, t));
      CHECK(mat_equal(lhs1, rhs1));
      Mat lhs2 = mat_mul(w, wt);
      Mat rhs2 = mat_add(mat_scale(mat_identity(lhs2.size()), Rational(n - t + 1)),
                         johnson_adjacency(n, t - 1));
      CHECK(mat_equal(lhs2, rhs2));
      // rank(W W^T) = binom(n, t-1)
      CHECK(mat_rank(lhs2) == lhs2.size());
    }
  }
}

TEST_CASE("johnson spectrum examples and annihilation") {
  auto s42 = johnson_spectrum(4, 2);
  REQUIRE(s42.size() == 3);
  CHECK(s42[0] == std::make_pair(Rational(4), Int(1)));
  CHECK(s42[1] == std::make_pair(Rational(0), Int(3)));
  CHECK(s42[2] == std::make_pair(Rational(-2), Int(2)));

  auto s51 = johnson_spectrum(5, 1);
  REQUIRE(s51.size() == 2);
  CHECK(s51[0] == std::make_pair(Rational(4), Int(1)));
  CHECK(s51[1] == std::make_pair(Rational(-1), Int(4)));

  for (int n = 2; n <= 8; ++n) {
    for (int t = 1; 2 * t <= n + 1; ++t) {
      auto spec = johnson_spectrum(n, t);
      Int total(0);
      for (const auto& [eig, mult] : spec) total += mult;
      CHECK(total == binomial(n, t));
      // The adjacency matrix is annihilated by prod (A - eig I), and its
      // power traces match the claimed multiplicities (Vandermonde pins
      // them uniquely).
      Mat a = johnson_adjacency(n, t);
      Mat prod = mat_identity(a.size());
      for (const auto& [eig, mult] : spec) {
        Mat shift = mat_add(a, mat_scale(mat_identity(a.size()), -eig));
        prod = mat_mul(prod, shift);
      }
      bool all_zero = true;
      for (const auto& row : prod) {
        for (const auto& v : row) all_zero = all_zero && v == 0;
      }
      CHECK(all_zero);
      Mat pw = mat_identity(a.size());
      for (int m = 0; m <= t; ++m) {
        Rational tr(0);
        for (size_t i = 0; i < pw.size(); ++i) tr += pw[i][i];
        Rational expect(0);
        for (const auto& [eig, mult] : spec) expect += rat_pow(eig, m) * Rational(mult);
        CHECK(tr == expect);
        pw = mat_mul(pw, a);
      }
    }
  }
}

TEST_CASE("kernel basis dimensions and membership") {
  auto b21 = kernel_basis(2, 1);
  REQUIRE(b21.size() == 1);
  CHECK(b21[0] == MultiPoly::variable(2, 0) - MultiPoly::variable(2, 1));

  auto b42 = kernel_basis(4, 2);
  REQUIRE(b42.size() == 2);

  auto b63 = kernel_basis(6, 3);
  CHECK(b63.size() == 5);

  for (int n = 2; n <= 10; ++n) {
    for (int t = 0; 2 * t <= n; ++t) {
      long syt = count_standard_tableaux(n, t);
      Int expect = binomial(n, t) - (t >= 1 ? binomial(n, t - 1) : Int(0));
      CHECK(Int(syt) == expect);
      if (n <= 8) {
        auto basis = kernel_basis(n, t);  // membership checked internally
        CHECK(Int(static_cast<long>(basis.size())) == expect);
      }
    }
  }
}

TEST_CASE("kernel basis spans the exact nullspace") {
  for (int n = 2; n <= 7; ++n) {
    for (int t = 1; 2 * t <= n; ++t) {
      auto basis = kernel_basis(n, t);
      Mat rows;
      for (const auto& p : basis) rows.push_back(to_level_vector(p, t));
      size_t base_rank = mat_rank(rows);
      CHECK(base_rank == basis.size());
      // Appending any nullspace vector of W_t must not increase the rank.
      // Build the nullspace by Gaussian elimination on W_t.
      Mat w = w_operator(n, t).entries;
      size_t cols = w[0].size();
      size_t rank = mat_rank(w);
      CHECK(cols - rank == basis.size());
    }
  }
}

TEST_CASE("decompose_homogeneous examples") {
  // n=2, p = x1: p1 = (x1-x2)/2, p0 = 1/2
  MultiPoly x1 = MultiPoly::variable(2, 0);
  MultiPoly x2 = MultiPoly::variable(2, 1);
  auto comps = decompose_homogeneous(x1);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == (x1 - x2) * rat(1, 2));
  CHECK(comps[1] == MultiPoly::constant(2, rat(1, 2)));

  auto comps2 = decompose_homogeneous(x1 - x2);
  CHECK(comps2[0] == x1 - x2);
  CHECK(comps2[1].is_zero());

  auto comps3 = decompose_homogeneous(x1 + x2);
  CHECK(comps3[0].is_zero());
  CHECK(comps3[1] == MultiPoly::constant(2, Rational(1)));

  CHECK_THROWS_AS(decompose_homogeneous(x1 + x1 * x2), std::invalid_argument);
}

TEST_CASE("decompose_homogeneous satisfies the kernel/prefactor identity") {
  std::mt19937_64 rng(606);
  for (int n = 2; n <= 7; ++n) {
    for (int t = 1; 2 * t <= n; ++t) {
      for (int iter = 0; iter < 8; ++iter) {
        // random homogeneous multilinear of degree t
        std::vector<std::pair<MultiPoly::Exp, Rational>> raw;
        std::uniform_int_distribution<long> dc(-3, 3);
        for (const auto& s : subsets_lex(n, t)) {
          MultiPoly::Exp e(static_cast<size_t>(n), 0);
          for (int i : s) e[static_cast<size_t>(i)] = 1;
          raw.emplace_back(std::move(e), Rational(dc(rng)));
        }
        MultiPoly p = MultiPoly::from_terms(n, std::move(raw));
        if (p.is_zero()) continue;
        auto comps = decompose_homogeneous(p);
        MultiPoly sum(n);
        for (int i = 0; i <= t; ++i) {
          if (comps[static_cast<size_t>(i)].is_zero()) continue;
          // kernel membership
          int lev = t - i;
          if (lev >= 1) {
            Vec img = mat_vec(w_operator(n, lev).entries,
                              to_level_vector(comps[static_cast<size_t>(i)], lev));
            for (const auto& c : img) CHECK(c == 0);
          }
          sum = sum + weight_poly_times(comps[static_cast<size_t>(i)], i, t);
        }
        CHECK(sum == p);
      }
    }
  }
}

TEST_CASE("decompose_general examples and recombination") {
  MultiPoly x1 = MultiPoly::variable(2, 0);
  MultiPoly x2 = MultiPoly::variable(2, 1);
  GeneralDecomp d = decompose_general(x1);
  REQUIRE(d.qj.size() == 2);
  CHECK(d.qj[0] == MultiPoly::weight_sum(2) * rat(1, 2));
  CHECK(d.qj[1] == (x1 - x2) * rat(1, 2));

  GeneralDecomp dc = decompose_general(MultiPoly::constant(3, Rational(7)));
  CHECK(dc.qj.size() == 1);
  CHECK(dc.qj[0] == MultiPoly::constant(3, Rational(7)));

  std::mt19937_64 rng(707);
  for (int n = 2; n <= 6; ++n) {
    for (int iter = 0; iter < 12; ++iter) {
      MultiPoly p = random_multilinear(rng, n, n / 2, 6);
      GeneralDecomp g = decompose_general(p);
      MultiPoly sum(n);
      for (const auto& q : g.qj) sum = sum + q;
      CHECK(sum == p.reduce_multilinear());
      // every p_{ij} annihilated by W_j
      for (int j = 1; j <= g.t; ++j) {
        for (const auto& comp : g.pij[static_cast<size_t>(j)]) {
          if (comp.is_zero()) continue;
          Vec img = mat_vec(w_operator(n, j).entries, to_level_vector(comp, j));
          for (const auto& c : img) CHECK(c == 0);
        }
      }
    }
  }
}

TEST_CASE("sym_kernel_product examples") {
  MultiPoly d2 = MultiPoly::variable(2, 0) - MultiPoly::variable(2, 1);
  auto [poly, inner] = sym_kernel_product(d2, d2);
  CHECK(inner == 2);
  UniPoly z = UniPoly::variable();
  CHECK(poly == z * (UniPoly::constant(Rational(2)) - z));
  // brute force: Sym((x1-x2)^2) evaluated through sym_uni
  CHECK(poly == sym_uni((d2 * d2).reduce_multilinear()));

  // cross-level: Sym(pq) = 0
  MultiPoly p4 = kernel_basis(4, 2)[0];
  MultiPoly q4 = kernel_basis(4, 1)[0];
  auto [cross, ic] = sym_kernel_product(p4, q4);
  CHECK(cross.is_zero());

  // orthogonal pair at n=4, t=2
  auto b42 = kernel_basis(4, 2);
  auto [pq, inner42] = sym_kernel_product(b42[0], b42[1]);
  Rational dot(0);
  Vec v0 = to_level_vector(b42[0], 2), v1 = to_level_vector(b42[1], 2);
  for (size_t i = 0; i < v0.size(); ++i) dot += v0[i] * v1[i];
  CHECK(inner42 == dot);
  if (dot == 0) CHECK(pq.is_zero());

  // not in kernel -> argument error
  CHECK_THROWS_AS(sym_kernel_product(MultiPoly::variable(2, 0), MultiPoly::variable(2, 0)),
                  std::invalid_argument);
}

TEST_CASE("sym_kernel_product matches brute-force symmetrization") {
  std::mt19937_64 rng(808);
  for (int n = 2; n <= 8; ++n) {
    for (int t = 1; 2 * t <= n; ++t) {
      auto basis = kernel_basis(n, t);
      std::uniform_int_distribution<size_t> db(0, basis.size() - 1);
      for (int iter = 0; iter < 4; ++iter) {
        const MultiPoly& p = basis[db(rng)];
        const MultiPoly& q = basis[db(rng)];
        auto [poly, inner] = sym_kernel_product(p, q);
        CHECK(poly == sym_uni((p * q).reduce_multilinear()));
      }
    }
  }
}

TEST_CASE("cross-level symmetrized products vanish") {
  for (int n = 2; n <= 8; ++n) {
    for (int t = 1; 2 * t <= n; ++t) {
      for (int u = 0; u < t; ++u) {
        auto bt = kernel_basis(n, t);
        auto bu = kernel_basis(n, u);
        for (const auto& p : bt) {
          for (const auto& q : bu) {
            CHECK(sym_uni((p * q).reduce_multilinear()).is_zero());
          }
        }
      }
    }
  }
}

TEST_CASE("blekherman_decompose examples") {
  // n=2, p=x1 -> z^2/4 + (1/4) z (2-z), totals z/2
  MultiPoly x1 = MultiPoly::variable(2, 0);
  BlekhermanDecomp d = blekherman_decompose({x1});
  UniPoly z = UniPoly::variable();
  REQUIRE(d.terms.size() == 2);
  CHECK(d.terms[0].gram[1][1] == rat(1, 4));
  CHECK(d.terms[1].gram[0][0] == rat(1, 4));
  UniPoly total = blekherman_recombine(d);
  CHECK(total == z * rat(1, 2));
  CHECK(total == sym_uni(x1));

  // constant input
  BlekhermanDecomp dc = blekherman_decompose({MultiPoly::constant(3, Rational(5))});
  CHECK(blekherman_recombine(dc) == UniPoly::constant(Rational(25)));

  // kernel input: single level-t term
  MultiPoly kp = kernel_basis(4, 2)[0];
  BlekhermanDecomp dk = blekherman_decompose({kp});
  auto [expect, inner] = sym_kernel_product(kp, kp);
  CHECK(blekherman_recombine(dk) == expect);
}

TEST_CASE("verify_blekherman accepts round trips and rejects tampering") {
  MultiPoly x1 = MultiPoly::variable(4, 0);
  MultiPoly x2 = MultiPoly::variable(4, 1);
  MultiPoly p = x1 * x2 - x2 * rat(1, 2) + MultiPoly::constant(4, rat(1, 3));
  BlekhermanDecomp d = blekherman_decompose({p});
  UniPoly target = sym_uni((p * p).reduce_multilinear());
  auto v = verify_blekherman(d, target);
  CHECK(v.ok);

  BlekhermanDecomp bad = d;
  bad.terms[0].gram[0][0] -= 1;
  auto v2 = verify_blekherman(bad, target);
  CHECK(!v2.ok);

  auto v3 = verify_blekherman(d, target + UniPoly::constant(Rational(1)));
  CHECK(!v3.ok);
  CHECK(!v3.identity_ok);

  // negated gram entry: identity breaks and/or PSD fails
  BlekhermanDecomp neg = d;
  for (auto& term : neg.terms) {
    for (auto& row : term.gram) {
      for (auto& val : row) val = -val;
    }
  }
  auto v4 = verify_blekherman(neg, target);
  CHECK(!v4.ok);
}

TEST_CASE("blekherman decomposition matches brute force on random inputs") {
  std::mt19937_64 rng(909);
  for (int n = 2; n <= 8; ++n) {
    for (int t = 1; 2 * t <= n; ++t) {
      for (int iter = 0; iter < 10; ++iter) {
        MultiPoly p = random_multilinear(rng, n, t, 2 * t + 2);
        BlekhermanDecomp d = blekherman_decompose({p});
        UniPoly target = sym_uni((p * p).reduce_multilinear());
        auto v = verify_blekherman(d, target);
        CHECK(v.ok);
        // top term is Sym^uni(p)^2
        UniPoly su = sym_uni(p);
        UniPoly top;
        const auto& gram = d.terms[0].gram;
        for (size_t k = 0; k < gram.size(); ++k) {
          for (size_t l = 0; l < gram.size(); ++l) {
            if (gram[k][l] == 0) continue;
            top = top + UniPoly::monomial(static_cast<int>(k + l), gram[k][l]);
          }
        }
        CHECK(top == su * su);
      }
    }
  }
}

TEST_CASE("blekherman_decompose sums over lists") {
  std::mt19937_64 rng(1010);
  MultiPoly a = random_multilinear(rng, 5, 2, 4);
  MultiPoly b = random_multilinear(rng, 5, 2, 4);
  BlekhermanDecomp d = blekherman_decompose({a, b});
  UniPoly target = sym_uni((a * a + b * b).reduce_multilinear());
  CHECK(verify_blekherman(d, target).ok);
}
