#include "sosq/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace sosq {

namespace {
const Rational kZero(0);
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) {
  UniPoly p;
  if (c != 0) p.c_.push_back(c);
  return p;
}

UniPoly UniPoly::monomial(int d, const Rational& coeff) {
  UniPoly p;
  if (coeff != 0) {
    p.c_.assign(static_cast<size_t>(d) + 1, Rational(0));
    p.c_.back() = coeff;
  }
  return p;
}

const Rational& UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(i)];
}

const Rational& UniPoly::leading() const {
  if (c_.empty()) return kZero;
  return c_.back();
}

Rational UniPoly::eval(const Rational& z) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  UniPoly d;
  if (c_.size() <= 1) return d;
  d.c_.resize(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d.c_[i - 1] = c_[i] * Rational(static_cast<long>(i));
  d.trim();
  return d;
}

UniPoly UniPoly::operator-() const {
  UniPoly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  UniPoly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  r.trim();
  return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  UniPoly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] -= o.c_[i];
  r.trim();
  return r;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  UniPoly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  r.trim();
  return r;
}

UniPoly UniPoly::operator*(const Rational& s) const {
  if (s == 0) return UniPoly();
  UniPoly r(*this);
  for (auto& c : r.c_) c *= s;
  return r;
}

UniPoly UniPoly::operator/(const Rational& s) const {
  if (s == 0) throw std::invalid_argument("division of polynomial by zero scalar");
  UniPoly r(*this);
  for (auto& c : r.c_) c /= s;
  return r;
}

UniPoly UniPoly::pow(unsigned long e) const {
  UniPoly acc = UniPoly::constant(Rational(1));
  UniPoly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * inner + UniPoly::constant(*it);
  }
  return acc;
}

UniPoly UniPoly::shift(const Rational& a) const { return compose_affine(Rational(1), a); }

UniPoly UniPoly::compose_affine(const Rational& a, const Rational& b) const {
  // Horner: acc(z) <- acc(z)*(a z + b) + c_i
  UniPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    UniPoly next;
    next.c_.assign(acc.c_.size() + 1, Rational(0));
    for (size_t i = 0; i < acc.c_.size(); ++i) {
      if (acc.c_[i] == 0) continue;
      next.c_[i + 1] += acc.c_[i] * a;
      next.c_[i] += acc.c_[i] * b;
    }
    next.c_.resize(std::max<size_t>(next.c_.size(), 1), Rational(0));
    next.c_[0] += *it;
    next.trim();
    acc = std::move(next);
  }
  return acc;
}

UniPoly UniPoly::even_half() const {
  UniPoly h;
  h.c_.assign(c_.size() / 2 + 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i % 2 == 1) {
      if (c_[i] != 0) throw std::invalid_argument("even_half on polynomial with odd terms");
    } else {
      h.c_[i / 2] = c_[i];
    }
  }
  h.trim();
  return h;
}

UniPoly UniPoly::substitute_square() const {
  UniPoly r;
  if (c_.empty()) return r;
  r.c_.assign(2 * c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[2 * i] = c_[i];
  r.trim();
  return r;
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeff(i);
    if (c == 0) continue;
    if (!first) os << (sign(c) > 0 ? " + " : " - ");
    else if (sign(c) < 0) os << "-";
    first = false;
    Rational a = rat_abs(c);
    if (a != 1 || i == 0) os << rat_str(a);
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

UniPoly::ZForm UniPoly::to_integer() const {
  ZForm f;
  f.den = 1;
  for (const auto& c : c_) f.den = lcm(f.den, c.get_den());
  f.coeffs.reserve(c_.size());
  for (const auto& c : c_) {
    Int scaled = c.get_num() * (f.den / c.get_den());
    f.coeffs.push_back(scaled);
  }
  return f;
}

std::pair<UniPoly, UniPoly> poly_divide(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
  UniPoly rem = num;
  std::vector<Rational> q;
  int dd = den.degree();
  if (num.degree() >= dd) q.assign(static_cast<size_t>(num.degree() - dd) + 1, Rational(0));
  const Rational& lead = den.leading();
  while (!rem.is_zero() && rem.degree() >= dd) {
    int shift = rem.degree() - dd;
    Rational factor = rem.leading() / lead;
    q[static_cast<size_t>(shift)] = factor;
    rem = rem - UniPoly::monomial(shift, factor) * den;
  }
  return {UniPoly(std::move(q)), rem};
}

UniPoly cheb_poly(int d) {
  if (d < 0) throw std::invalid_argument("cheb_poly: negative degree");
  UniPoly t0 = UniPoly::constant(Rational(1));
  if (d == 0) return t0;
  UniPoly t1 = UniPoly::variable();
  if (d == 1) return t1;
  UniPoly two_z = UniPoly::monomial(1, Rational(2));
  for (int i = 2; i <= d; ++i) {
    UniPoly t2 = two_z * t1 - t0;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  return t1;
}

UniPoly falling_factorial(int k) {
  if (k < 0) throw std::invalid_argument("falling_factorial: negative k");
  UniPoly acc = UniPoly::constant(Rational(1));
  for (int j = 0; j < k; ++j) {
    acc = acc * (UniPoly::variable() - UniPoly::constant(Rational(j)));
  }
  return acc;
}

UniPoly lagrange_basis(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("lagrange_basis: need 0 <= k <= n");
  UniPoly acc = UniPoly::constant(Rational(1));
  Rational denom(1);
  for (int j = 0; j <= n; ++j) {
    if (j == k) continue;
    acc = acc * (UniPoly::variable() - UniPoly::constant(Rational(j)));
    denom *= Rational(k - j);
  }
  return acc / denom;
}

Int zform_eval(const std::vector<Int>& coeffs, const Int& x) {
  Int acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

}  // namespace sosq
