#pragma once

// Symmetrization structure theory on the hypercube: the partial-derivative
// operators W_t on homogeneous multilinear polynomials, Johnson-scheme
// spectra, kernel bases from standard Young tableaux, the iterated
// kernel/image decompositions, and the resulting decomposition of Sym(p^2)
// into prefactor-weighted univariate sums of squares.

#include <utility>
#include <vector>

#include "sosq/matrix.hpp"
#include "sosq/multipoly.hpp"
#include "sosq/unipoly.hpp"

namespace sosq {

// Largest n for which dense subset-indexed matrices are allowed.
constexpr int kMaxSubsetN = 12;

// Inclusion matrix of (t-1)-subsets into t-subsets: the matrix of W_t.
struct SubsetMatrix {
  int n = 0, t = 0;
  Mat entries;  // rows: (t-1)-subsets, cols: t-subsets, lex order
};

SubsetMatrix w_operator(int n, int t);

// Coefficient vector of a homogeneous multilinear degree-t polynomial in the
// lex t-subset basis, and back.
Vec to_level_vector(const MultiPoly& p, int t);
MultiPoly from_level_vector(int n, int t, const Vec& v);

// Adjacency matrix of the Johnson graph J(n, t).
Mat johnson_adjacency(int n, int t);

// Eigenvalue/multiplicity pairs t(n-t) - i(n+1-i), binom(n,i)-binom(n,i-1).
std::vector<std::pair<Rational, Int>> johnson_spectrum(int n, int t);

// Basis of Ker(W_t) from standard Young tableaux of shape (n-t, t):
// products of column differences. Verified against W_t and by exact rank.
std::vector<MultiPoly> kernel_basis(int n, int t);

// Number of standard Young tableaux of shape (n-t, t) by direct enumeration.
long count_standard_tableaux(int n, int t);

// p in L_t splits as p = sum_i comps[i] * prod_{j=1..i} (|x|-t+j) with
// comps[i] in Ker(W_{t-i}); comps.size() == t+1.
std::vector<MultiPoly> decompose_homogeneous(const MultiPoly& p);

// Full decomposition of p in M_t per levels of Ker(W_j).
struct GeneralDecomp {
  int n = 0, t = 0;
  // pij[j][i] in Ker(W_j): coefficient of |x|^i inside q_j; i <= t-j.
  std::vector<std::vector<MultiPoly>> pij;
  // q_j = sum_i |x|^i pij[j][i], multilinear-reduced; p == sum_j qj.
  std::vector<MultiPoly> qj;
};
GeneralDecomp decompose_general(const MultiPoly& p);

// Sym(p q) for p, q in kernels: inner-product scaled prefactor polynomial.
// Returns the univariate polynomial and <p|q>. Distinct levels give zero.
std::pair<UniPoly, Rational> sym_kernel_product(const MultiPoly& p, const MultiPoly& q);

// One PSD Gram matrix per level j; the level-j univariate term is
// sum_{k,l} gram[k][l] z^(k+l), already scaled by (n-2j)!/n!.
struct BlekhermanTerm {
  int j = 0;
  Mat gram;
};
struct BlekhermanDecomp {
  int n = 0, t = 0;
  std::vector<BlekhermanTerm> terms;
};

BlekhermanDecomp blekherman_decompose(const std::vector<MultiPoly>& ps);

// Prefactor prod_{0<=i<j} (z-i)(n-z-i).
UniPoly blekherman_prefactor(int n, int j);

// sum_j p_{t-j}(z) * prefactor_j(z) rebuilt from the Gram matrices.
UniPoly blekherman_recombine(const BlekhermanDecomp& d);

struct BlekhermanVerify {
  bool ok = false;
  bool identity_ok = false;
  bool psd_ok = false;
  int bad_level = -1;
};
BlekhermanVerify verify_blekherman(const BlekhermanDecomp& d, const UniPoly& target);

}  // namespace sosq
