#include "sosq/sturm.hpp"

#include <algorithm>
#include <cassert>

namespace sosq {

namespace {

using ZPoly = std::vector<Int>;  // dense, no trailing zeros, empty == 0

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

ZPoly to_zpoly_primitive(const UniPoly& p, bool keep_sign = true) {
  UniPoly::ZForm f = p.to_integer();
  ZPoly z = std::move(f.coeffs);
  ztrim(z);
  if (z.empty()) return z;
  Int content(0);
  for (const auto& c : z) {
    content = gcd(content, c);
  }
  content = abs(content);
  if (content > 1) {
    for (auto& c : z) c /= content;
  }
  (void)keep_sign;
  return z;
}

UniPoly from_zpoly(const ZPoly& z) {
  std::vector<Rational> c;
  c.reserve(z.size());
  for (const auto& v : z) c.emplace_back(v);
  return UniPoly(std::move(c));
}

// prem(a, b) = lc(b)^(deg a - deg b + 1) * a  mod  b, computed fraction-free.
ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  const Int& lb = b.back();
  int e = zdeg(a) - zdeg(b) + 1;
  while (!r.empty() && zdeg(r) >= zdeg(b)) {
    int s = zdeg(r) - zdeg(b);
    Int lr = r.back();
    for (auto& c : r) c *= lb;
    for (size_t i = 0; i < b.size(); ++i) {
      r[static_cast<size_t>(s) + i] -= lr * b[i];
    }
    ztrim(r);
    --e;
  }
  if (e > 0) {
    Int f = int_pow(lb, static_cast<unsigned long>(e));
    for (auto& c : r) c *= f;
  }
  return r;
}

void div_exact_scalar(ZPoly& p, const Int& d) {
  if (d == 1) return;
  for (auto& c : p) {
    Int q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    c = q;
  }
}

int sign_at_point(const ZPoly& p, const SturmPoint& pt) {
  if (p.empty()) return 0;
  switch (pt.kind) {
    case SturmPoint::Kind::pos_inf:
      return sgn(p.back());
    case SturmPoint::Kind::neg_inf: {
      int s = sgn(p.back());
      return (zdeg(p) % 2 == 0) ? s : -s;
    }
    case SturmPoint::Kind::finite: {
      // sign of sum c_i a^i b^(d-i) with x = a/b, b > 0.
      const Int& a = pt.x.get_num();
      const Int& b = pt.x.get_den();
      Int acc(0), bpow(1);
      for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc *= a;
        acc += *it * bpow;
        bpow *= b;
      }
      return sgn(acc);
    }
  }
  return 0;
}

void count_variations(PrsScan& scan) {
  size_t npts = scan.signs.empty() ? 0 : scan.signs[0].size();
  scan.variations.assign(npts, 0);
  for (size_t j = 0; j < npts; ++j) {
    int prev = 0;
    long v = 0;
    for (const auto& row : scan.signs) {
      int s = row[j];
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    scan.variations[j] = v;
  }
}

}  // namespace

PrsScan prs_scan(const UniPoly& a, const UniPoly& b, const std::vector<SturmPoint>& pts) {
  PrsScan scan;
  ZPoly f = to_zpoly_primitive(a);
  ZPoly g = to_zpoly_primitive(b);
  auto push_signs = [&](const ZPoly& p) {
    std::vector<int> row(pts.size());
    for (size_t j = 0; j < pts.size(); ++j) row[j] = sign_at_point(p, pts[j]);
    scan.signs.push_back(std::move(row));
  };
  if (f.empty()) {
    scan.last = from_zpoly(g);
    if (!g.empty() && g.back() < 0) scan.last = -scan.last;
    if (!g.empty()) push_signs(g);
    count_variations(scan);
    return scan;
  }
  push_signs(f);
  if (g.empty()) {
    scan.last = from_zpoly(f);
    if (f.back() < 0) scan.last = -scan.last;
    count_variations(scan);
    return scan;
  }
  push_signs(g);

  Int gc(1), h(1);
  while (true) {
    if (zdeg(f) < zdeg(g)) {
      // First pair may come in unsorted; pseudo_rem needs deg f >= deg g.
      std::swap(f, g);
    }
    int delta = zdeg(f) - zdeg(g);
    ZPoly r = pseudo_rem(f, g);
    if (r.empty()) break;
    Int divisor = gc * int_pow(h, static_cast<unsigned long>(delta));
    bool div_neg = divisor < 0;
    if (div_neg) divisor = -divisor;
    div_exact_scalar(r, divisor);
    // Sturm convention: next element is a positive multiple of
    // -rem(f, g). prem scales rem by lc(g)^(delta+1); the division above
    // used |divisor|, contributing another sign when divisor < 0.
    bool scale_neg = (sgn(g.back()) < 0) && ((delta + 1) % 2 == 1);
    if (div_neg) scale_neg = !scale_neg;
    if (!scale_neg) {
      for (auto& c : r) c = -c;
    }
    gc = g.back();
    if (delta >= 1) {
      Int hp = int_pow(gc, static_cast<unsigned long>(delta));
      if (delta > 1) {
        Int hd = int_pow(h, static_cast<unsigned long>(delta - 1));
        Int q;
        mpz_divexact(q.get_mpz_t(), hp.get_mpz_t(), hd.get_mpz_t());
        hp = q;
      }
      h = hp;
    }
    f = std::move(g);
    g = std::move(r);
    push_signs(g);
  }
  // g holds the last nonzero element.
  Int content(0);
  for (const auto& c : g) content = gcd(content, c);
  content = abs(content);
  if (content > 1) div_exact_scalar(g, content);
  scan.last = from_zpoly(g);
  if (!g.empty() && g.back() < 0) scan.last = -scan.last;
  count_variations(scan);
  return scan;
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) return UniPoly::zero();
  if (a.is_zero()) {
    ZPoly z = to_zpoly_primitive(b);
    UniPoly r = from_zpoly(z);
    return (r.leading() < 0) ? -r : r;
  }
  if (b.is_zero()) {
    ZPoly z = to_zpoly_primitive(a);
    UniPoly r = from_zpoly(z);
    return (r.leading() < 0) ? -r : r;
  }
  PrsScan scan = prs_scan(a, b, {});
  return scan.last;
}

long count_real_roots(const UniPoly& p) {
  if (p.degree() <= 0) return 0;
  PrsScan scan = prs_scan(p, p.derivative(), {SturmPoint::neg_inf(), SturmPoint::pos_inf()});
  return scan.variations[0] - scan.variations[1];
}

long count_real_roots_in(const UniPoly& p, const std::optional<Rational>& lo,
                         const std::optional<Rational>& hi) {
  if (p.degree() <= 0) return 0;
  if (lo && p.eval(*lo) == 0) throw std::invalid_argument("sturm count: root at lower endpoint");
  std::vector<SturmPoint> pts;
  pts.push_back(lo ? SturmPoint::at(*lo) : SturmPoint::neg_inf());
  pts.push_back(hi ? SturmPoint::at(*hi) : SturmPoint::pos_inf());
  PrsScan scan = prs_scan(p, p.derivative(), pts);
  return scan.variations[0] - scan.variations[1];
}

long count_roots_open_halfline(const UniPoly& p, const Rational& u0, bool left_side) {
  if (p.degree() <= 0) return 0;
  UniPoly w = p;
  UniPoly lin = UniPoly::variable() - UniPoly::constant(u0);
  while (!w.is_constant() && w.eval(u0) == 0) {
    auto [q, r] = poly_divide(w, lin);
    assert(r.is_zero());
    w = std::move(q);
  }
  if (w.degree() <= 0) return 0;
  if (left_side) {
    return count_real_roots_in(w, std::nullopt, u0);
  }
  // (u0, +inf): endpoint u0 is not a root of w by construction.
  return count_real_roots_in(w, u0, std::nullopt);
}

SquarefreeDecomp squarefree_decompose(const UniPoly& p) {
  SquarefreeDecomp out;
  out.content = Rational(0);
  if (p.is_zero()) return out;
  if (p.is_constant()) {
    out.content = p.coeff(0);
    return out;
  }
  UniPoly g = poly_gcd(p, p.derivative());
  auto exact_div = [](const UniPoly& num, const UniPoly& den) {
    auto [q, r] = poly_divide(num, den);
    if (!r.is_zero()) throw std::logic_error("squarefree_decompose: non-exact division");
    return q;
  };
  std::vector<UniPoly> factors;
  if (g.degree() <= 0) {
    factors.push_back(p);
  } else {
    // Yun's algorithm.
    UniPoly b = exact_div(p, g);
    UniPoly c = exact_div(p.derivative(), g);
    UniPoly d = c - b.derivative();
    while (b.degree() > 0) {
      UniPoly a = poly_gcd(b, d);
      if (a.degree() < 0) a = UniPoly::constant(Rational(1));
      factors.push_back(a);
      b = exact_div(b, a);
      c = exact_div(d, a);
      d = c - b.derivative();
    }
  }
  // Normalize factors to primitive integer with positive lc; absorb the
  // remaining scalar into content.
  UniPoly prod = UniPoly::constant(Rational(1));
  out.factors.clear();
  for (size_t i = 0; i < factors.size(); ++i) {
    UniPoly f = factors[i];
    if (f.degree() <= 0) {
      out.factors.push_back(UniPoly::constant(Rational(1)));
      continue;
    }
    UniPoly::ZForm zf = f.to_integer();
    Int content(0);
    for (const auto& c : zf.coeffs) content = gcd(content, c);
    content = abs(content);
    std::vector<Rational> cc;
    cc.reserve(zf.coeffs.size());
    for (const auto& c : zf.coeffs) cc.emplace_back(Rational(c / content));
    UniPoly fn(std::move(cc));
    if (fn.leading() < 0) fn = -fn;
    out.factors.push_back(fn);
    for (size_t e = 0; e <= i; ++e) prod = prod * fn;
  }
  out.content = p.leading() / prod.leading();
  return out;
}

Rational cauchy_root_bound(const UniPoly& p) {
  if (p.degree() <= 0) return Rational(1);
  Rational m(0);
  const Rational lead = rat_abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    Rational a = rat_abs(p.coeff(i)) / lead;
    if (a > m) m = a;
  }
  return m + 1;
}

}  // namespace sosq
