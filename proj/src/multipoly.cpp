#include "sosq/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sosq {

MultiPoly::MultiPoly(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("MultiPoly: negative variable count");
}

void MultiPoly::normalize(std::vector<std::pair<Exp, Rational>>&& raw) {
  std::sort(raw.begin(), raw.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  terms_.clear();
  for (auto& t : raw) {
    if (t.first.size() != static_cast<size_t>(n_)) {
      throw std::invalid_argument("MultiPoly: exponent vector length mismatch");
    }
    if (!terms_.empty() && terms_.back().first == t.first) {
      terms_.back().second += t.second;
      if (terms_.back().second == 0) terms_.pop_back();
    } else {
      if (t.second != 0) terms_.emplace_back(std::move(t.first), std::move(t.second));
    }
  }
  check_caps();
}

void MultiPoly::check_caps() const {
  for (const auto& [e, c] : terms_) {
    for (uint8_t v : e) {
      if (v > kMaxExponent) {
        throw std::domain_error("MultiPoly: exponent cap exceeded");
      }
    }
  }
}

MultiPoly MultiPoly::from_terms(int n, std::vector<std::pair<Exp, Rational>> raw) {
  MultiPoly p(n);
  p.normalize(std::move(raw));
  return p;
}

MultiPoly MultiPoly::constant(int n, const Rational& c) {
  MultiPoly p(n);
  if (c != 0) p.terms_.emplace_back(Exp(static_cast<size_t>(n), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int n, int i) {
  if (i < 0 || i >= n) throw std::invalid_argument("MultiPoly::variable: index out of range");
  MultiPoly p(n);
  Exp e(static_cast<size_t>(n), 0);
  e[static_cast<size_t>(i)] = 1;
  p.terms_.emplace_back(std::move(e), Rational(1));
  return p;
}

MultiPoly MultiPoly::monomial(int n, Exp e, const Rational& c) {
  MultiPoly p(n);
  if (e.size() != static_cast<size_t>(n)) {
    throw std::invalid_argument("MultiPoly::monomial: exponent length mismatch");
  }
  if (c != 0) p.terms_.emplace_back(std::move(e), c);
  p.check_caps();
  return p;
}

MultiPoly MultiPoly::from_subset(int n, const std::vector<int>& subset, const Rational& coeff,
                                 int power) {
  Exp e(static_cast<size_t>(n), 0);
  for (int i : subset) {
    if (i < 0 || i >= n) throw std::invalid_argument("from_subset: index out of range");
    e[static_cast<size_t>(i)] = static_cast<uint8_t>(power);
  }
  return monomial(n, std::move(e), coeff);
}

MultiPoly MultiPoly::weight_sum(int n) {
  std::vector<std::pair<Exp, Rational>> raw;
  raw.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    Exp e(static_cast<size_t>(n), 0);
    e[static_cast<size_t>(i)] = 1;
    raw.emplace_back(std::move(e), Rational(1));
  }
  return from_terms(n, std::move(raw));
}

MultiPoly MultiPoly::elementary_symmetric(int n, int k, int power) {
  if (k < 0 || k > n) throw std::invalid_argument("elementary_symmetric: k out of range");
  std::vector<std::pair<Exp, Rational>> raw;
  for (const auto& s : subsets_lex(n, k)) {
    Exp e(static_cast<size_t>(n), 0);
    for (int i : s) e[static_cast<size_t>(i)] = static_cast<uint8_t>(power);
    raw.emplace_back(std::move(e), Rational(1));
  }
  return from_terms(n, std::move(raw));
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int t = 0;
    for (uint8_t v : e) t += v;
    d = std::max(d, t);
  }
  return d;
}

int MultiPoly::max_var_exponent() const {
  int m = 0;
  for (const auto& [e, c] : terms_) {
    for (uint8_t v : e) m = std::max(m, static_cast<int>(v));
  }
  return m;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int t = 0;
    for (uint8_t v : e) t += v;
    if (d < 0) d = t;
    if (t != d) return false;
  }
  return true;
}

Rational MultiPoly::coeff(const Exp& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const auto& t, const Exp& key) { return t.first < key; });
  if (it != terms_.end() && it->first == e) return it->second;
  return Rational(0);
}

Rational MultiPoly::eval(std::span<const Rational> point) const {
  if (point.size() != static_cast<size_t>(n_)) {
    throw std::invalid_argument("MultiPoly::eval: point dimension mismatch");
  }
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < e.size(); ++i) {
      for (uint8_t j = 0; j < e[i]; ++j) t *= point[i];
    }
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (n_ != o.n_) throw std::invalid_argument("MultiPoly: variable count mismatch");
  std::vector<std::pair<Exp, Rational>> raw;
  raw.reserve(terms_.size() + o.terms_.size());
  raw.insert(raw.end(), terms_.begin(), terms_.end());
  raw.insert(raw.end(), o.terms_.begin(), o.terms_.end());
  return from_terms(n_, std::move(raw));
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (n_ != o.n_) throw std::invalid_argument("MultiPoly: variable count mismatch");
  std::vector<std::pair<Exp, Rational>> raw;
  raw.reserve(terms_.size() * o.terms_.size());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exp e(ea);
      for (size_t i = 0; i < e.size(); ++i) {
        int v = static_cast<int>(e[i]) + static_cast<int>(eb[i]);
        if (v > kMaxExponent) throw std::domain_error("MultiPoly: exponent cap exceeded");
        e[i] = static_cast<uint8_t>(v);
      }
      raw.emplace_back(std::move(e), ca * cb);
    }
  }
  return from_terms(n_, std::move(raw));
}

MultiPoly MultiPoly::operator*(const Rational& s) const {
  if (s == 0) return MultiPoly(n_);
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.second *= s;
  return r;
}

MultiPoly MultiPoly::reduce_multilinear() const {
  std::vector<std::pair<Exp, Rational>> raw;
  raw.reserve(terms_.size());
  for (const auto& [e, c] : terms_) {
    Exp r(e);
    for (auto& v : r) v = v > 0 ? 1 : 0;
    raw.emplace_back(std::move(r), c);
  }
  return from_terms(n_, std::move(raw));
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (sign(c) > 0 ? " + " : " - ");
    else if (sign(c) < 0) os << "-";
    first = false;
    Rational a = rat_abs(c);
    bool any_var = false;
    for (uint8_t v : e) any_var = any_var || v > 0;
    if (a != 1 || !any_var) os << rat_str(a);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*x" << (i + 1);
      if (e[i] > 1) os << "^" << static_cast<int>(e[i]);
    }
  }
  return os.str();
}

std::vector<std::vector<int>> subsets_lex(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

long subset_rank(int n, const std::vector<int>& subset) {
  long rank = 0;
  int k = static_cast<int>(subset.size());
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    for (int v = prev + 1; v < subset[static_cast<size_t>(i)]; ++v) {
      rank += binomial(static_cast<unsigned long>(n - 1 - v),
                       static_cast<unsigned long>(k - 1 - i))
                  .get_si();
    }
    prev = subset[static_cast<size_t>(i)];
  }
  return rank;
}

}  // namespace sosq
