#include "sosq/symfun.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sosq {

MultiPoly symmetrize(const MultiPoly& p) {
  const int n = p.nvars();
  if (n > 10) throw std::length_error("symmetrize: n > 10 not supported");
  // Group terms by the multiset of exponents; each orbit contributes the
  // average of its collected coefficients on every arrangement.
  std::map<MultiPoly::Exp, Rational> orbit_sum;  // key: sorted exponent vector
  for (const auto& [e, c] : p.terms()) {
    MultiPoly::Exp key(e);
    std::sort(key.begin(), key.end());
    orbit_sum[key] += c;
  }
  std::vector<std::pair<MultiPoly::Exp, Rational>> raw;
  for (const auto& [key, total] : orbit_sum) {
    if (total == 0) continue;
    // Orbit size = number of distinct permutations of the exponent vector.
    MultiPoly::Exp perm(key);
    long orbit = 0;
    do {
      ++orbit;
    } while (std::next_permutation(perm.begin(), perm.end()));
    Rational avg = total / Rational(orbit);
    // perm is back to the sorted (first) arrangement.
    do {
      raw.emplace_back(perm, avg);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return MultiPoly::from_terms(n, std::move(raw));
}

UniPoly sym_uni(const MultiPoly& p) {
  const int n = p.nvars();
  MultiPoly m = p.reduce_multilinear();
  // Sym of a degree-k multilinear monomial is the falling factorial
  // |x|(|x|-1)...(|x|-k+1) / (n(n-1)...(n-k+1)).
  std::map<int, Rational> by_size;
  for (const auto& [e, c] : m.terms()) {
    int k = 0;
    for (uint8_t v : e) k += v;
    by_size[k] += c;
  }
  UniPoly out;
  for (const auto& [k, c] : by_size) {
    if (c == 0) continue;
    Rational denom(1);
    for (int j = 0; j < k; ++j) denom *= Rational(n - j);
    out = out + falling_factorial(k) * (c / denom);
  }
  return out;
}

UniPoly fk_poly(int n, int k) {
  if (k < 0 || k > n - 1) throw std::invalid_argument("fk_poly: need 0 <= k <= n-1");
  UniPoly z = UniPoly::variable();
  return (z - UniPoly::constant(Rational(k))) * (z - UniPoly::constant(Rational(k + 1)));
}

std::pair<Rational, Rational> hyper_error(const UniPoly& h, const UniPoly& f, int n) {
  if (n < 0) throw std::invalid_argument("hyper_error: negative n");
  // Work over the integers with a common denominator so that evaluation at
  // the n+1 integer points is plain integer Horner.
  UniPoly diff = h - f;
  UniPoly::ZForm zf = diff.to_integer();
  Rational linf(0);
  Rational l1(0);
  Int l1_num(0);
  for (int i = 0; i <= n; ++i) {
    Int v = zform_eval(zf.coeffs, Int(i));
    Int a = abs(v);
    Rational pt = rat(a, zf.den);
    if (pt > linf) linf = pt;
    l1_num += a * binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(i));
  }
  l1 = rat(l1_num, zf.den);
  return {linf, l1};
}

Rational average_on_weight(const MultiPoly& p, int w) {
  const int n = p.nvars();
  if (w < 0 || w > n) throw std::invalid_argument("average_on_weight: bad weight");
  Rational total(0);
  long count = 0;
  for (const auto& s : subsets_lex(n, w)) {
    std::vector<Rational> pt(static_cast<size_t>(n), Rational(0));
    for (int i : s) pt[static_cast<size_t>(i)] = Rational(1);
    total += p.eval(pt);
    ++count;
  }
  return total / Rational(count);
}

}  // namespace sosq
