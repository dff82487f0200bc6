#include "sosq/duals.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "sosq/blekherman.hpp"
#include "sosq/matrix.hpp"

namespace sosq {

Rational grig_B(int n, const Rational& r, int t) {
  if (t < 0 || t > n) throw std::invalid_argument("grig_B: need 0 <= t <= n");
  Rational num(1), den(1);
  for (int j = 0; j < t; ++j) {
    num *= r - Rational(j);
    den *= Rational(n - j);
  }
  return num / den;
}

Rational grig_eval(const MultiPoly& p, const Rational& r) {
  return sym_uni(p).eval(r);
}

namespace {

MultiPoly random_multilinear(std::mt19937_64& rng, int n, int max_deg) {
  std::uniform_int_distribution<long> dc(-3, 3);
  std::uniform_int_distribution<long> dden(1, 3);
  std::uniform_int_distribution<int> dv(0, n - 1);
  std::uniform_int_distribution<int> dt(1, 2 * max_deg + 2);
  std::vector<std::pair<MultiPoly::Exp, Rational>> raw;
  int terms = dt(rng);
  for (int t = 0; t < terms; ++t) {
    MultiPoly::Exp e(static_cast<size_t>(n), 0);
    std::uniform_int_distribution<int> dd(0, max_deg);
    int deg = dd(rng);
    for (int j = 0; j < deg; ++j) e[static_cast<size_t>(dv(rng))] = 1;
    raw.emplace_back(std::move(e), rat(dc(rng), dden(rng)));
  }
  return MultiPoly::from_terms(n, std::move(raw));
}

}  // namespace

GrigReport grig_property_report(int n, const Rational& r, int k, int trials, uint64_t seed) {
  if (k < 0 || !(Rational(k) < r && r < Rational(n - k))) {
    throw std::invalid_argument("grig_property_report: need k < r < n-k");
  }
  if (2 * (k + 1) > n) {
    throw std::invalid_argument("grig_property_report: need k+1 <= n/2");
  }
  GrigReport rep;
  std::mt19937_64 rng(seed);
  MultiPoly ws = MultiPoly::weight_sum(n);
  MultiPoly knap = ws - MultiPoly::constant(n, r);

  // Property 1: G_r(x_S (sum x_i - r)) = 0 for all |S| < n, via both the
  // B-recurrence and direct evaluation on every subset up to the degree cap.
  rep.p1_ok = true;
  int tmax = std::min(n - 1, 2 * k + 3);
  for (int t = 0; t <= tmax; ++t) {
    Rational lhs = Rational(n - t) * grig_B(n, r, t + 1) + (Rational(t) - r) * grig_B(n, r, t);
    if (lhs != 0) rep.p1_ok = false;
    for (const auto& s : subsets_lex(n, t)) {
      MultiPoly xs = MultiPoly::from_subset(n, s, Rational(1));
      if (grig_eval(xs * knap, r) != 0) rep.p1_ok = false;
      ++rep.p1_checked;
    }
  }

  // Property 2: G_r(g (x_i^2 - x_i)) = 0 for random g.
  rep.p2_ok = true;
  std::uniform_int_distribution<int> dv(0, n - 1);
  for (int t = 0; t < trials; ++t) {
    MultiPoly g = random_multilinear(rng, n, std::min(n, 2 * k + 1));
    MultiPoly xi = MultiPoly::variable(n, dv(rng));
    if (grig_eval(g * (xi * xi - xi), r) != 0) rep.p2_ok = false;
    ++rep.p2_trials;
  }

  // Property 3: G_r(1) = 1.
  rep.p3_ok = grig_eval(MultiPoly::constant(n, Rational(1)), r) == 1;

  // Property 4: G_r(p^2) >= 0 for random p of degree <= k+1.
  rep.p4_ok = true;
  for (int t = 0; t < trials; ++t) {
    MultiPoly p = random_multilinear(rng, n, k + 1);
    Rational v = grig_eval((p * p).reduce_multilinear(), r);
    if (v < 0) rep.p4_ok = false;
    ++rep.p4_trials;
  }

  // Kernel formula: for p in Ker(W_t), Sym^uni(p^2)(r) equals
  // <p|p> (n-2t)!/n! prod_{i<t} (r-i)(n-r-i), nonnegative in the regime.
  rep.kernel_formula_ok = true;
  for (int t = 1; t <= k + 1 && 2 * t <= n && n <= kMaxSubsetN; ++t) {
    auto basis = kernel_basis(n, t);
    std::uniform_int_distribution<size_t> db(0, basis.size() - 1);
    const MultiPoly& p = basis[db(rng)];
    auto [poly, inner] = sym_kernel_product(p, p);
    Rational direct = grig_eval((p * p).reduce_multilinear(), r);
    if (direct != poly.eval(r) || direct < 0) rep.kernel_formula_ok = false;
  }

  rep.ok = rep.p1_ok && rep.p2_ok && rep.p3_ok && rep.p4_ok && rep.kernel_formula_ok;
  return rep;
}

PseudoDensity pseudo_density_build(int n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("pseudo_density_build: need odd n >= 3");
  PseudoDensity out;
  out.n = n;
  out.degree = n - 1;
  Rational half_n = rat(n, 2);
  Rational two_n = rat_pow(Rational(2), n);
  std::vector<Rational> values;
  values.reserve(static_cast<size_t>(n) + 1);
  for (int w = 0; w <= n; ++w) {
    Rational lw = lagrange_basis(n, w).eval(half_n);
    values.push_back(two_n * lw / Rational(binomial(n, static_cast<unsigned long>(w))));
  }
  out.profile = SymProfile(n, std::move(values));

  UniPoly f = fk_poly(n, n / 2);
  Rational e_density(0), e_f(0), inf(0);
  for (int w = 0; w <= n; ++w) {
    Rational weight = Rational(binomial(n, static_cast<unsigned long>(w))) / two_n;
    const Rational& dv = out.profile.values[static_cast<size_t>(w)];
    e_density += weight * dv;
    e_f += weight * dv * f.eval(Rational(w));
    Rational a = rat_abs(dv);
    if (a > inf) inf = a;
  }
  out.e_density = e_density;
  out.e_f = e_f;
  out.inf_norm = inf;
  out.ratio = e_f / inf;
  // ratio < -1/(4 sqrt n), compared exactly via 16 n ratio^2 > 1.
  out.ratio_below_neg_quarter_sqrt =
      sign(out.ratio) < 0 && Rational(16 * n) * out.ratio * out.ratio > 1;
  if (e_density != 1) throw std::logic_error("pseudo_density_build: E[D] != 1");
  return out;
}

namespace {

// Moment blocks after the Johnson-scheme diagonalization: level j gets
// B_j[k,l] = sum_w mu(w) psi(w) w^{k+l} prod_{0<=i<j} (w-i)(n-w-i).
bool moment_blocks_psd(const SymProfile& psi, int half_deg) {
  const int n = psi.n;
  Rational two_n = rat_pow(Rational(2), n);
  for (int j = 0; j <= half_deg; ++j) {
    size_t side = static_cast<size_t>(half_deg - j) + 1;
    Mat block = mat_zero(side, side);
    for (int w = 0; w <= n; ++w) {
      Rational mu = Rational(binomial(n, static_cast<unsigned long>(w))) / two_n;
      Rational pref(1);
      for (int i = 0; i < j; ++i) {
        pref *= Rational(w - i) * Rational(n - w - i);
      }
      Rational base = mu * psi.values[static_cast<size_t>(w)] * pref;
      if (base == 0) continue;
      Rational wp(1);
      std::vector<Rational> powers(2 * side - 1);
      for (size_t e = 0; e < powers.size(); ++e) {
        powers[e] = wp;
        wp *= Rational(w);
      }
      for (size_t kk = 0; kk < side; ++kk) {
        for (size_t ll = kk; ll < side; ++ll) {
          block[kk][ll] += base * powers[kk + ll];
        }
      }
    }
    for (size_t kk = 0; kk < side; ++kk) {
      for (size_t ll = 0; ll < kk; ++ll) block[kk][ll] = block[ll][kk];
    }
    if (!ldl_psd_check(block).psd) return false;
  }
  return true;
}

}  // namespace

bool check_moment_sign_dense(const SymProfile& psi, int d, MomentSign want) {
  const int n = psi.n;
  int half = d / 2;
  // val[u] = E_x[psi(x) x_U] for |U| = u.
  Rational two_n = rat_pow(Rational(2), n);
  std::vector<Rational> val(static_cast<size_t>(std::min(n, 2 * half)) + 1, Rational(0));
  for (size_t u = 0; u < val.size(); ++u) {
    Rational acc(0);
    for (int w = static_cast<int>(u); w <= n; ++w) {
      acc += Rational(binomial(static_cast<unsigned long>(n - u),
                               static_cast<unsigned long>(w - static_cast<int>(u)))) *
             psi.values[static_cast<size_t>(w)];
    }
    val[u] = acc / two_n;
  }
  // Gather all subsets of size <= half.
  std::vector<std::vector<int>> idx;
  for (int t = 0; t <= half; ++t) {
    for (auto& s : subsets_lex(n, t)) idx.push_back(std::move(s));
  }
  if (idx.size() > 1200) throw std::length_error("check_moment_sign_dense: matrix too large");
  Mat m = mat_zero(idx.size(), idx.size());
  for (size_t a = 0; a < idx.size(); ++a) {
    for (size_t b = a; b < idx.size(); ++b) {
      std::vector<int> un = idx[a];
      un.insert(un.end(), idx[b].begin(), idx[b].end());
      std::sort(un.begin(), un.end());
      un.erase(std::unique(un.begin(), un.end()), un.end());
      m[a][b] = val[un.size()];
      m[b][a] = m[a][b];
    }
  }
  if (want == MomentSign::nsd) m = mat_scale(m, Rational(-1));
  return ldl_psd_check(m).psd;
}

bool check_moment_sign(const SymProfile& psi, int d, MomentSign want) {
  if (d < 0) throw std::invalid_argument("check_moment_sign: negative degree");
  const int n = psi.n;
  int half = d / 2;
  if (2 * half <= n) {
    SymProfile use = psi;
    if (want == MomentSign::nsd) {
      for (auto& v : use.values) v = -v;
    }
    return moment_blocks_psd(use, half);
  }
  return check_moment_sign_dense(psi, d, want);
}

bool witness_check(const Witness& w, const UniPoly& f) {
  const int n = w.n;
  Rational inf(0);
  for (const auto& v : w.profile.values) {
    Rational a = rat_abs(v);
    if (a > inf) inf = a;
  }
  if (inf != 1) return false;
  Rational two_n = rat_pow(Rational(2), n);
  Rational e_f(0);
  for (int ww = 0; ww <= n; ++ww) {
    e_f += Rational(binomial(n, static_cast<unsigned long>(ww))) *
           w.profile.values[static_cast<size_t>(ww)] * f.eval(Rational(ww)) / two_n;
  }
  if (!(e_f > w.delta)) return false;
  return check_moment_sign(w.profile, 2 * w.d, MomentSign::nsd);
}

Rational appendix_d_A(int m) {
  if (m < 0) throw std::invalid_argument("appendix_d_A: negative m");
  Rational acc(0);
  Rational prev(0);
  for (int i = 0; i <= m; ++i) {
    Rational term = Rational(binomial(static_cast<unsigned long>(2 * i),
                                      static_cast<unsigned long>(i))) /
                    rat_pow(Rational(4), i);
    Rational step = term * term;
    acc += step;
    if (i >= 1 && acc - prev != step) {
      throw std::logic_error("appendix_d_A: recurrence check failed");
    }
    prev = acc;
  }
  return acc;
}

LinfLower linf_error_lower(int n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("linf_error_lower: need odd n >= 3");
  LinfLower out;
  Rational half_n = rat(n, 2);
  Rational total(0);
  for (int k = 0; k <= n; ++k) {
    total += rat_abs(lagrange_basis(n, k).eval(half_n));
  }
  out.lagrange_abs_sum = total;
  Rational am = appendix_d_A((n - 1) / 2);
  if (total != am) throw std::logic_error("linf_error_lower: sum != A((n-1)/2)");
  out.bound = 1 / (4 * total);
  const double gamma = 0.57721566490153286;
  out.asymptotic =
      1.0 / (4.0 * (std::log((n + 1) / 2.0) + gamma + std::log(16.0)) / M_PI);
  return out;
}

}  // namespace sosq
