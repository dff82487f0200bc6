#pragma once

// Symmetric-function machinery on {0,1}^n: symmetrization, the univariate
// image of a symmetric function in the Hamming weight, the target quadratics
// f_k, and exact l_inf / l_1 error functionals.

#include <utility>
#include <vector>

#include "sosq/multipoly.hpp"
#include "sosq/unipoly.hpp"

namespace sosq {

// Symmetric function stored by Hamming weight, length n+1.
struct SymProfile {
  int n = 0;
  std::vector<Rational> values;

  SymProfile() = default;
  SymProfile(int n_, std::vector<Rational> v) : n(n_), values(std::move(v)) {
    if (values.size() != static_cast<size_t>(n) + 1) {
      throw std::invalid_argument("SymProfile: need n+1 values");
    }
  }
};

// (1/n!) sum over permutations of p(sigma x), computed by orbit sums.
// Requires n <= 10.
MultiPoly symmetrize(const MultiPoly& p);

// Univariate polynomial with sym_uni(p)(|x|) == Sym(p)(x) on the cube.
// Applies multilinear reduction first; works per monomial, any n.
UniPoly sym_uni(const MultiPoly& p);

// (z - k)(z - k - 1); requires 0 <= k <= n-1.
UniPoly fk_poly(int n, int k);

// max_i |h(i)-f(i)| and sum_i binom(n,i) |h(i)-f(i)| over i in {0..n}.
std::pair<Rational, Rational> hyper_error(const UniPoly& h, const UniPoly& f, int n);

// Average of p over all weight-w points of {0,1}^n (brute force; test oracle).
Rational average_on_weight(const MultiPoly& p, int w);

}  // namespace sosq
