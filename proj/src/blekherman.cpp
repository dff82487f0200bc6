#include "sosq/blekherman.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace sosq {

namespace {

void check_subset_size(int n, const char* who) {
  if (n > kMaxSubsetN) {
    throw std::length_error(std::string(who) + ": n exceeds dense subset-matrix cap");
  }
}

// Cached W matrices and inverses of W_t W_t^T, keyed by (n, t).
struct LevelCache {
  Mat w;        // W_t
  Mat wwt_inv;  // (W_t W_t^T)^{-1}
};

const LevelCache& level_cache(int n, int t) {
  static std::map<std::pair<int, int>, LevelCache> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, t);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  LevelCache lc;
  lc.w = w_operator(n, t).entries;
  Mat wwt = mat_mul(lc.w, mat_transpose(lc.w));
  auto inv = mat_inverse(wwt);
  if (!inv) throw std::logic_error("level_cache: W W^T singular");
  lc.wwt_inv = std::move(*inv);
  return cache.emplace(key, std::move(lc)).first->second;
}

}  // namespace

SubsetMatrix w_operator(int n, int t) {
  if (t < 1 || t > n) throw std::invalid_argument("w_operator: need 1 <= t <= n");
  check_subset_size(n, "w_operator");
  SubsetMatrix m;
  m.n = n;
  m.t = t;
  auto rows = subsets_lex(n, t - 1);
  auto cols = subsets_lex(n, t);
  m.entries = mat_zero(rows.size(), cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    // Each t-subset covers exactly t (t-1)-subsets.
    for (int drop = 0; drop < t; ++drop) {
      std::vector<int> sub;
      sub.reserve(static_cast<size_t>(t) - 1);
      for (int i = 0; i < t; ++i) {
        if (i != drop) sub.push_back(cols[j][static_cast<size_t>(i)]);
      }
      m.entries[static_cast<size_t>(subset_rank(n, sub))][j] = 1;
    }
  }
  return m;
}

Vec to_level_vector(const MultiPoly& p, int t) {
  const int n = p.nvars();
  auto subs = subsets_lex(n, t);
  Vec v(subs.size(), Rational(0));
  for (const auto& [e, c] : p.terms()) {
    std::vector<int> s;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 1) {
        s.push_back(static_cast<int>(i));
      } else if (e[i] != 0) {
        throw std::invalid_argument("to_level_vector: not multilinear");
      }
    }
    if (static_cast<int>(s.size()) != t) {
      throw std::invalid_argument("to_level_vector: not homogeneous of the given degree");
    }
    v[static_cast<size_t>(subset_rank(n, s))] = c;
  }
  return v;
}

MultiPoly from_level_vector(int n, int t, const Vec& v) {
  auto subs = subsets_lex(n, t);
  if (v.size() != subs.size()) throw std::invalid_argument("from_level_vector: size mismatch");
  std::vector<std::pair<MultiPoly::Exp, Rational>> raw;
  for (size_t i = 0; i < subs.size(); ++i) {
    if (v[i] == 0) continue;
    MultiPoly::Exp e(static_cast<size_t>(n), 0);
    for (int idx : subs[i]) e[static_cast<size_t>(idx)] = 1;
    raw.emplace_back(std::move(e), v[i]);
  }
  return MultiPoly::from_terms(n, std::move(raw));
}

Mat johnson_adjacency(int n, int t) {
  check_subset_size(n, "johnson_adjacency");
  auto subs = subsets_lex(n, t);
  Mat a = mat_zero(subs.size(), subs.size());
  for (size_t i = 0; i < subs.size(); ++i) {
    for (size_t j = i + 1; j < subs.size(); ++j) {
      std::vector<int> inter;
      std::set_intersection(subs[i].begin(), subs[i].end(), subs[j].begin(), subs[j].end(),
                            std::back_inserter(inter));
      if (static_cast<int>(inter.size()) == t - 1) {
        a[i][j] = 1;
        a[j][i] = 1;
      }
    }
  }
  return a;
}

std::vector<std::pair<Rational, Int>> johnson_spectrum(int n, int t) {
  if (t < 0 || 2 * t > n + 1) {
    throw std::invalid_argument("johnson_spectrum: need t <= (n+1)/2");
  }
  std::vector<std::pair<Rational, Int>> out;
  for (int i = 0; i <= t; ++i) {
    Rational eig(static_cast<long>(t) * (n - t) - static_cast<long>(i) * (n + 1 - i));
    Int mult = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(i));
    if (i >= 1) {
      mult -= binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(i - 1));
    }
    out.emplace_back(eig, mult);
  }
  return out;
}

long count_standard_tableaux(int n, int t) {
  // Ballot walk: prefix counts of second-row cells never exceed first-row.
  long count = 0;
  std::vector<std::pair<int, int>> stack = {{0, 0}};
  while (!stack.empty()) {
    auto [r1, r2] = stack.back();
    stack.pop_back();
    if (r1 + r2 == n) {
      ++count;
      continue;
    }
    if (r1 < n - t) stack.emplace_back(r1 + 1, r2);
    if (r2 < t && r2 < r1) stack.emplace_back(r1, r2 + 1);
  }
  return count;
}

std::vector<MultiPoly> kernel_basis(int n, int t) {
  if (t < 0 || 2 * t > n) throw std::invalid_argument("kernel_basis: need t <= n/2");
  check_subset_size(n, "kernel_basis");
  std::vector<MultiPoly> basis;
  if (t == 0) {
    basis.push_back(MultiPoly::constant(n, Rational(1)));
    return basis;
  }
  // Enumerate standard Young tableaux of shape (n-t, t) as assignments of
  // 1..n to the two rows with the ballot property; the i-th column pairs
  // row1[i] with row2[i].
  std::vector<int> row1, row2;
  std::vector<MultiPoly> out;
  auto rec = [&](auto&& self, int next) -> void {
    if (next == n) {
      MultiPoly p = MultiPoly::constant(n, Rational(1));
      for (size_t i = 0; i < row2.size(); ++i) {
        p = p * (MultiPoly::variable(n, row1[i]) - MultiPoly::variable(n, row2[i]));
      }
      out.push_back(std::move(p));
      return;
    }
    if (static_cast<int>(row1.size()) < n - t) {
      row1.push_back(next);
      self(self, next + 1);
      row1.pop_back();
    }
    if (static_cast<int>(row2.size()) < t && row2.size() < row1.size()) {
      row2.push_back(next);
      self(self, next + 1);
      row2.pop_back();
    }
  };
  rec(rec, 0);

  // Dimension check (Lemma on Ker(W_t)) and exact independence check.
  Int expect = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(t)) -
               binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(t - 1));
  if (Int(static_cast<long>(out.size())) != expect) {
    throw std::logic_error("kernel_basis: tableau count mismatch");
  }
  const Mat& w = level_cache(n, t).w;
  Mat rows;
  for (const auto& p : out) {
    Vec v = to_level_vector(p, t);
    Vec img = mat_vec(w, v);
    for (const auto& c : img) {
      if (c != 0) throw std::logic_error("kernel_basis: tableau polynomial not in kernel");
    }
    rows.push_back(std::move(v));
  }
  if (mat_rank(rows) != out.size()) {
    throw std::logic_error("kernel_basis: tableau polynomials not independent");
  }
  return out;
}

std::vector<MultiPoly> decompose_homogeneous(const MultiPoly& p) {
  const int n = p.nvars();
  check_subset_size(n, "decompose_homogeneous");
  if (!p.is_multilinear() || !p.is_homogeneous()) {
    throw std::invalid_argument("decompose_homogeneous: need homogeneous multilinear input");
  }
  const int t = p.total_degree();
  if (2 * t > n) throw std::invalid_argument("decompose_homogeneous: need deg <= n/2");
  std::vector<MultiPoly> comps(static_cast<size_t>(t) + 1, MultiPoly(n));
  Vec cur = to_level_vector(p, t);
  for (int lev = t; lev >= 1; --lev) {
    const LevelCache& lc = level_cache(n, lev);
    Vec rhs = mat_vec(lc.w, cur);
    Vec wvec = mat_vec(lc.wwt_inv, rhs);
    Vec img = mat_vec(mat_transpose(lc.w), wvec);
    Vec ker(cur.size());
    for (size_t i = 0; i < cur.size(); ++i) ker[i] = cur[i] - img[i];
    comps[static_cast<size_t>(t - lev)] = from_level_vector(n, lev, ker);
    cur = std::move(wvec);
  }
  comps[static_cast<size_t>(t)] = from_level_vector(n, 0, cur);
  return comps;
}

GeneralDecomp decompose_general(const MultiPoly& p) {
  const int n = p.nvars();
  check_subset_size(n, "decompose_general");
  MultiPoly m = p.reduce_multilinear();
  const int t = m.total_degree();
  if (2 * t > n) throw std::invalid_argument("decompose_general: need deg <= n/2");
  GeneralDecomp out;
  out.n = n;
  out.t = t;
  out.pij.assign(static_cast<size_t>(t) + 1, {});
  for (int j = 0; j <= t; ++j) {
    out.pij[static_cast<size_t>(j)].assign(static_cast<size_t>(t - j) + 1, MultiPoly(n));
  }
  // Split into homogeneous components.
  for (int d = 0; d <= t; ++d) {
    std::vector<std::pair<MultiPoly::Exp, Rational>> raw;
    for (const auto& [e, c] : m.terms()) {
      int deg = 0;
      for (uint8_t v : e) deg += v;
      if (deg == d) raw.emplace_back(e, c);
    }
    MultiPoly pd = MultiPoly::from_terms(n, std::move(raw));
    if (pd.is_zero()) continue;
    std::vector<MultiPoly> comps = decompose_homogeneous(pd);
    for (int i = 0; i <= d; ++i) {
      const MultiPoly& phi = comps[static_cast<size_t>(i)];  // in Ker(W_{d-i})
      if (phi.is_zero()) continue;
      int level = d - i;
      // Prefactor prod_{j=1..i} (z - d + j) expanded in powers of z.
      UniPoly pref = UniPoly::constant(Rational(1));
      for (int jj = 1; jj <= i; ++jj) {
        pref = pref * (UniPoly::variable() - UniPoly::constant(Rational(d - jj)));
      }
      for (int powz = 0; powz <= pref.degree(); ++powz) {
        const Rational& c = pref.coeff(powz);
        if (c == 0) continue;
        auto& slot = out.pij[static_cast<size_t>(level)][static_cast<size_t>(powz)];
        slot = slot + phi * c;
      }
    }
  }
  MultiPoly ws = MultiPoly::weight_sum(n);
  for (int j = 0; j <= t; ++j) {
    MultiPoly q(n);
    MultiPoly wpow = MultiPoly::constant(n, Rational(1));
    for (int i = 0; i <= t - j; ++i) {
      const MultiPoly& c = out.pij[static_cast<size_t>(j)][static_cast<size_t>(i)];
      if (!c.is_zero()) q = q + (wpow * c).reduce_multilinear();
      if (i < t - j) wpow = (wpow * ws).reduce_multilinear();
    }
    out.qj.push_back(q.reduce_multilinear());
  }
  return out;
}

namespace {

int kernel_level_checked(const MultiPoly& p, const char* who) {
  if (!p.is_multilinear() || !p.is_homogeneous()) {
    throw std::invalid_argument(std::string(who) + ": input not homogeneous multilinear");
  }
  int t = p.total_degree();
  if (t >= 1) {
    const Mat& w = level_cache(p.nvars(), t).w;
    Vec img = mat_vec(w, to_level_vector(p, t));
    for (const auto& c : img) {
      if (c != 0) throw std::invalid_argument(std::string(who) + ": input not in Ker(W_t)");
    }
  }
  return t;
}

}  // namespace

UniPoly blekherman_prefactor(int n, int j) {
  UniPoly acc = UniPoly::constant(Rational(1));
  UniPoly z = UniPoly::variable();
  for (int i = 0; i < j; ++i) {
    acc = acc * (z - UniPoly::constant(Rational(i)));
    acc = acc * (UniPoly::constant(Rational(n - i)) - z);
  }
  return acc;
}

std::pair<UniPoly, Rational> sym_kernel_product(const MultiPoly& p, const MultiPoly& q) {
  if (p.nvars() != q.nvars()) throw std::invalid_argument("sym_kernel_product: nvars mismatch");
  const int n = p.nvars();
  if (p.is_zero() || q.is_zero()) return {UniPoly::zero(), Rational(0)};
  int tp = kernel_level_checked(p, "sym_kernel_product");
  int tq = kernel_level_checked(q, "sym_kernel_product");
  if (2 * tp > n || 2 * tq > n) {
    throw std::invalid_argument("sym_kernel_product: level exceeds n/2");
  }
  if (tp != tq) return {UniPoly::zero(), Rational(0)};
  Vec vp = to_level_vector(p, tp);
  Vec vq = to_level_vector(q, tq);
  Rational inner(0);
  for (size_t i = 0; i < vp.size(); ++i) inner += vp[i] * vq[i];
  Rational scale = rat(factorial(static_cast<unsigned long>(n - 2 * tp)),
                       factorial(static_cast<unsigned long>(n)));
  return {blekherman_prefactor(n, tp) * (inner * scale), inner};
}

BlekhermanDecomp blekherman_decompose(const std::vector<MultiPoly>& ps) {
  if (ps.empty()) throw std::invalid_argument("blekherman_decompose: empty input");
  const int n = ps.front().nvars();
  int t = 0;
  for (const auto& p : ps) {
    if (p.nvars() != n) throw std::invalid_argument("blekherman_decompose: nvars mismatch");
    t = std::max(t, p.reduce_multilinear().total_degree());
  }
  if (2 * t > n) throw std::invalid_argument("blekherman_decompose: need deg <= n/2");
  BlekhermanDecomp out;
  out.n = n;
  out.t = t;
  for (int j = 0; j <= t; ++j) {
    BlekhermanTerm term;
    term.j = j;
    term.gram = mat_zero(static_cast<size_t>(t - j) + 1, static_cast<size_t>(t - j) + 1);
    out.terms.push_back(std::move(term));
  }
  for (const auto& p : ps) {
    GeneralDecomp dec = decompose_general(p);
    for (int j = 0; j <= dec.t; ++j) {
      auto& gram = out.terms[static_cast<size_t>(j)].gram;
      const auto& comps = dec.pij[static_cast<size_t>(j)];
      for (size_t k = 0; k < comps.size(); ++k) {
        if (comps[k].is_zero()) continue;
        Vec vk = to_level_vector(comps[k], j);
        for (size_t l = k; l < comps.size(); ++l) {
          if (comps[l].is_zero()) continue;
          Vec vl = to_level_vector(comps[l], j);
          Rational inner(0);
          for (size_t i = 0; i < vk.size(); ++i) inner += vk[i] * vl[i];
          gram[k][l] += inner;
          if (l != k) gram[l][k] += inner;
        }
      }
    }
  }
  for (int j = 0; j <= t; ++j) {
    Rational scale = rat(factorial(static_cast<unsigned long>(n - 2 * j)),
                         factorial(static_cast<unsigned long>(n)));
    out.terms[static_cast<size_t>(j)].gram =
        mat_scale(out.terms[static_cast<size_t>(j)].gram, scale);
  }
  return out;
}

UniPoly blekherman_recombine(const BlekhermanDecomp& d) {
  UniPoly total;
  for (const auto& term : d.terms) {
    UniPoly quad;
    size_t m = term.gram.size();
    for (size_t k = 0; k < m; ++k) {
      for (size_t l = 0; l < m; ++l) {
        if (term.gram[k][l] == 0) continue;
        quad = quad + UniPoly::monomial(static_cast<int>(k + l), term.gram[k][l]);
      }
    }
    total = total + quad * blekherman_prefactor(d.n, term.j);
  }
  return total;
}

BlekhermanVerify verify_blekherman(const BlekhermanDecomp& d, const UniPoly& target) {
  BlekhermanVerify v;
  v.identity_ok = blekherman_recombine(d) == target;
  v.psd_ok = true;
  for (const auto& term : d.terms) {
    LdlResult ldl = ldl_psd_check(term.gram);
    if (!ldl.psd) {
      v.psd_ok = false;
      v.bad_level = term.j;
      break;
    }
  }
  v.ok = v.identity_ok && v.psd_ok;
  return v;
}

}  // namespace sosq
