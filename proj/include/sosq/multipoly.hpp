#pragma once

// Sparse polynomials in n boolean variables. Terms are kept as a sorted
// vector of (exponent vector, coefficient) pairs with no zero coefficients.
// Per-variable exponents are capped; the knapsack construction needs
// exponents up to 2k+4, so the cap is generous but still a hard check
// against runaway products.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sosq/rational.hpp"

namespace sosq {

class MultiPoly {
 public:
  using Exp = std::vector<uint8_t>;
  static constexpr int kMaxExponent = 16;

  MultiPoly() : n_(0) {}
  explicit MultiPoly(int n);

  static MultiPoly constant(int n, const Rational& c);
  static MultiPoly variable(int n, int i);
  static MultiPoly monomial(int n, Exp e, const Rational& c);
  // coeff * prod_{i in subset} x_i^power
  static MultiPoly from_subset(int n, const std::vector<int>& subset, const Rational& coeff,
                               int power = 1);
  // sum_i x_i
  static MultiPoly weight_sum(int n);
  // k-th elementary symmetric polynomial in x_i^power.
  static MultiPoly elementary_symmetric(int n, int k, int power = 1);

  int nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::vector<std::pair<Exp, Rational>>& terms() const { return terms_; }

  int total_degree() const;
  int max_var_exponent() const;
  bool is_multilinear() const { return max_var_exponent() <= 1; }
  bool is_homogeneous() const;

  Rational coeff(const Exp& e) const;
  Rational eval(std::span<const Rational> point) const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rational& s) const;
  bool operator==(const MultiPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  // Every exponent >= 1 replaced by 1 (equal pointwise on {0,1}^n).
  MultiPoly reduce_multilinear() const;

  std::string str() const;

  // Takes ownership of an unsorted/unreduced term list.
  static MultiPoly from_terms(int n, std::vector<std::pair<Exp, Rational>> raw);

 private:
  void normalize(std::vector<std::pair<Exp, Rational>>&& raw);
  void check_caps() const;
  int n_;
  std::vector<std::pair<Exp, Rational>> terms_;
};

inline MultiPoly operator*(const Rational& s, const MultiPoly& p) { return p * s; }

// Subsets of {0..n-1} of size k in lexicographic order.
std::vector<std::vector<int>> subsets_lex(int n, int k);
// Rank of a sorted subset in subsets_lex order.
long subset_rank(int n, const std::vector<int>& subset);

}  // namespace sosq
