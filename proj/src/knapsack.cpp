#include "sosq/knapsack.hpp"

#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>

namespace sosq {

namespace {

// n for which refutations keep a fully expanded g and explicit h squares.
constexpr int kExpandN = 12;
constexpr int kExplicitSquaresN = 10;

// Cached powers of the weight sum e_1 in the full ring.
const MultiPoly& weight_power(int n, int j) {
  static std::map<std::pair<int, int>, MultiPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  for (int i = 0; i <= j; ++i) {
    auto key = std::make_pair(n, i);
    if (cache.find(key) != cache.end()) continue;
    MultiPoly p = (i == 0) ? MultiPoly::constant(n, Rational(1))
                           : cache.at(std::make_pair(n, i - 1)) * MultiPoly::weight_sum(n);
    cache.emplace(key, std::move(p));
  }
  return cache.at(std::make_pair(n, j));
}

MultiPoly compose_weight(int n, const UniPoly& q) {
  MultiPoly acc(n);
  for (int j = 0; j <= q.degree(); ++j) {
    if (q.coeff(j) == 0) continue;
    acc = acc + weight_power(n, j) * q.coeff(j);
  }
  return acc;
}

MultiPoly ideal_member(int n, int i) {
  // x_i^2 - x_i
  MultiPoly xi = MultiPoly::variable(n, i);
  return xi * xi - xi;
}

}  // namespace

AkDecomposition a_k_decomposition(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("a_k_decomposition: need 0 <= k <= n");
  AkDecomposition out;
  out.n = n;
  out.k = k;
  out.g_list.assign(static_cast<size_t>(n), MultiPoly(n));
  if (k == 0) {
    out.ek_sq = MultiPoly::constant(n, Rational(1));
    return out;
  }
  // Induction for A_k = sum (x_i^2-x_i) g_i + k! e_k(x), starting at A_1 = e_1.
  std::vector<MultiPoly> g(static_cast<size_t>(n), MultiPoly(n));
  for (int m = 1; m < k; ++m) {
    // A_{m+1} = A_m (e_1 - m); new g_i = g_i (e_1 - m) + m! f_i with
    // f_i = sum over |S|=m, S ni i of prod_{j in S \ i} x_j.
    MultiPoly shift = MultiPoly::weight_sum(n) - MultiPoly::constant(n, Rational(m));
    Rational mfact(factorial(static_cast<unsigned long>(m)));
    std::vector<MultiPoly> next(static_cast<size_t>(n), MultiPoly(n));
    // Collect f_i for all i in one pass over the (m-1)-subsets: for T of
    // size m-1 and i not in T, S = T + {i} contributes prod_{j in T} x_j.
    std::vector<std::vector<std::pair<MultiPoly::Exp, Rational>>> fraw(
        static_cast<size_t>(n));
    for (const auto& tset : subsets_lex(n, m - 1)) {
      MultiPoly::Exp e(static_cast<size_t>(n), 0);
      for (int j : tset) e[static_cast<size_t>(j)] = 1;
      size_t pos = 0;
      for (int i = 0; i < n; ++i) {
        if (pos < tset.size() && tset[pos] == i) {
          ++pos;
          continue;
        }
        fraw[static_cast<size_t>(i)].emplace_back(e, mfact);
      }
    }
    for (int i = 0; i < n; ++i) {
      MultiPoly fi = MultiPoly::from_terms(n, std::move(fraw[static_cast<size_t>(i)]));
      next[static_cast<size_t>(i)] = g[static_cast<size_t>(i)] * shift + fi;
    }
    g = std::move(next);
  }
  // Claim A.2: replace k! e_k(x) by k! e_k(x^2) plus ideal members:
  // e_k(x) = e_k(x^2) - sum_j (x_j^2-x_j) t_j,
  // t_j = sum_{S ni j} prod_{i in S, i<j} x_i prod_{i in S, i>j} x_i^2.
  Rational kfact(factorial(static_cast<unsigned long>(k)));
  std::vector<std::vector<std::pair<MultiPoly::Exp, Rational>>> traw(static_cast<size_t>(n));
  for (const auto& sset : subsets_lex(n, k)) {
    for (size_t jj = 0; jj < sset.size(); ++jj) {
      MultiPoly::Exp e(static_cast<size_t>(n), 0);
      for (size_t ii = 0; ii < sset.size(); ++ii) {
        if (ii < jj) e[static_cast<size_t>(sset[ii])] = 1;
        if (ii > jj) e[static_cast<size_t>(sset[ii])] = 2;
      }
      traw[static_cast<size_t>(sset[jj])].emplace_back(std::move(e), kfact);
    }
  }
  for (int i = 0; i < n; ++i) {
    MultiPoly ti = MultiPoly::from_terms(n, std::move(traw[static_cast<size_t>(i)]));
    out.g_list[static_cast<size_t>(i)] = g[static_cast<size_t>(i)] - ti;
  }
  out.ek_sq = MultiPoly::elementary_symmetric(n, k, 2) * kfact;

  for (const auto& gi : out.g_list) {
    if (gi.total_degree() > 2 * k - 2) {
      throw std::logic_error("a_k_decomposition: multiplier degree exceeds 2k-2");
    }
  }
  // Re-verify the identity by full expansion when affordable.
  if (n <= kExpandN) {
    MultiPoly lhs = compose_weight(n, falling_factorial(k));
    MultiPoly rhs = out.ek_sq;
    for (int i = 0; i < n; ++i) {
      rhs = rhs + ideal_member(n, i) * out.g_list[static_cast<size_t>(i)];
    }
    if (lhs != rhs) throw std::logic_error("a_k_decomposition: identity check failed");
  }
  return out;
}

Refutation knapsack_refutation(int n, int k, const Rational& r) {
  if (k < 0 || 2 * k > n) throw std::invalid_argument("knapsack_refutation: need 0 <= k <= n/2");
  if (r.get_den() == 1) throw std::invalid_argument("knapsack_refutation: r must not be integral");
  if (!(Rational(k) < r && r < Rational(k + 1))) {
    throw std::invalid_argument("knapsack_refutation: need k < r < k+1");
  }
  Refutation ref;
  ref.n = n;
  ref.k = k;
  ref.r = r;
  // b = -r(r-1)...(r-k-1) > 0 for r in (k, k+1).
  Rational b(-1);
  for (int j = 0; j <= k + 1; ++j) b *= r - Rational(j);
  if (!(b > 0)) throw std::logic_error("knapsack_refutation: b not positive");

  UniPoly akb = falling_factorial(k + 2) + UniPoly::constant(b);
  auto [q, rem] = poly_divide(akb, UniPoly::variable() - UniPoly::constant(r));
  if (!rem.is_zero()) throw std::logic_error("knapsack_refutation: division remainder nonzero");
  ref.g_uni = q / b;

  AkDecomposition dec = a_k_decomposition(n, k + 2);
  ref.g_list.reserve(static_cast<size_t>(n));
  for (const auto& gi : dec.g_list) ref.g_list.push_back(gi * (Rational(-1) / b));

  ref.h.set_size = k + 2;
  Rational mfact(factorial(static_cast<unsigned long>(k + 2)));
  ref.h.scale = mfact / b;
  Rational root;
  if (rat_is_square(ref.h.scale, &root)) {
    ref.h.multiplier = Rational(1);
    if (n <= kExplicitSquaresN) {
      for (const auto& s : subsets_lex(n, k + 2)) {
        ref.h.squares.push_back(MultiPoly::from_subset(n, s, root));
      }
    }
  } else {
    ref.h.multiplier = ref.h.scale;
    if (n <= kExplicitSquaresN) {
      for (const auto& s : subsets_lex(n, k + 2)) {
        ref.h.squares.push_back(MultiPoly::from_subset(n, s, Rational(1)));
      }
    }
  }
  if (n <= kExpandN) {
    ref.g_expanded = compose_weight(n, ref.g_uni);
  }
  int deg_g_term = ref.g_uni.degree() + 1;
  int deg_gi_term = 0;
  for (const auto& gi : ref.g_list) {
    if (!gi.is_zero()) deg_gi_term = std::max(deg_gi_term, gi.total_degree() + 2);
  }
  int deg_h = 2 * (k + 2);
  ref.degree = std::max(std::max(deg_g_term, deg_gi_term), deg_h);
  return ref;
}

Rational elementary_symmetric_squares_at(const std::vector<Rational>& point, int k) {
  std::vector<Rational> e(static_cast<size_t>(k) + 1, Rational(0));
  e[0] = 1;
  for (size_t m = 0; m < point.size(); ++m) {
    Rational sq = point[m] * point[m];
    for (int j = std::min<int>(k, static_cast<int>(m) + 1); j >= 1; --j) {
      e[static_cast<size_t>(j)] += sq * e[static_cast<size_t>(j - 1)];
    }
  }
  return e[static_cast<size_t>(k)];
}

Rational refutation_g_at(const Refutation& ref, const std::vector<Rational>& point) {
  Rational s(0);
  for (const auto& x : point) s += x;
  return ref.g_uni.eval(s);
}

RefutationReport verify_refutation(const Refutation& ref, VerifyMode mode, uint64_t seed) {
  RefutationReport rep;
  const int n = ref.n;
  // Recompute the refutation degree from the stored pieces.
  int deg_g_term = ref.g_uni.degree() + 1;
  if (ref.g_expanded) deg_g_term = ref.g_expanded->total_degree() + 1;
  int deg_gi = 0;
  for (const auto& gi : ref.g_list) {
    if (!gi.is_zero()) deg_gi = std::max(deg_gi, gi.total_degree() + 2);
  }
  rep.recomputed_degree = std::max(std::max(deg_g_term, deg_gi), 2 * ref.h.set_size);
  rep.degree_ok = rep.recomputed_degree == 2 * ref.k + 4;

  // Check the sos presentation of h: the explicit squares, when present,
  // must reproduce scale * e_{set_size}(x^2); the multiplier must be > 0.
  rep.h_sos_ok = ref.h.multiplier > 0;
  MultiPoly h_sym = MultiPoly::elementary_symmetric(n, ref.h.set_size, 2) * ref.h.scale;
  if (!ref.h.squares.empty()) {
    MultiPoly acc(n);
    for (const auto& s : ref.h.squares) acc = acc + s * s;
    rep.h_sos_ok = rep.h_sos_ok && (acc * ref.h.multiplier == h_sym);
  }

  if (mode == VerifyMode::expand) {
    if (!ref.g_expanded) {
      rep.detail = "expand mode requires the expanded g (small n certificates only)";
      return rep;
    }
    MultiPoly lhs = *ref.g_expanded *
                    (MultiPoly::weight_sum(n) - MultiPoly::constant(n, ref.r));
    for (int i = 0; i < n; ++i) {
      lhs = lhs + ideal_member(n, i) * ref.g_list[static_cast<size_t>(i)];
    }
    MultiPoly rhs = MultiPoly::constant(n, Rational(1)) + h_sym;
    rep.identity_ok = lhs == rhs;
    if (!rep.identity_ok) {
      MultiPoly diff = lhs - rhs;
      rep.detail = "first differing monomial: " +
                   (diff.is_zero() ? std::string("(none)") : diff.str().substr(0, 120));
    }
    rep.soundness = "full expansion over the polynomial ring; exact term-by-term comparison";
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coord(0, 2 * ref.k + 5);
    rep.identity_ok = true;
    for (int trial = 0; trial < 64 && rep.identity_ok; ++trial) {
      std::vector<Rational> pt(static_cast<size_t>(n));
      Rational wsum(0);
      for (auto& v : pt) {
        v = Rational(coord(rng));
        wsum += v;
      }
      Rational lhs = ref.g_uni.eval(wsum) * (wsum - ref.r);
      if (ref.g_expanded) lhs = ref.g_expanded->eval(pt) * (wsum - ref.r);
      for (int i = 0; i < n; ++i) {
        const Rational& x = pt[static_cast<size_t>(i)];
        Rational ideal = x * x - x;
        if (ideal != 0) lhs += ref.g_list[static_cast<size_t>(i)].eval(pt) * ideal;
      }
      Rational rhs = Rational(1) +
                     ref.h.scale * elementary_symmetric_squares_at(pt, ref.h.set_size);
      if (lhs != rhs) {
        rep.identity_ok = false;
        std::ostringstream os;
        os << "mismatch at trial " << trial;
        rep.detail = os.str();
      }
    }
    rep.soundness =
        "polynomial identity testing: 64 seeded points with coordinates from {0..2k+5}; "
        "a nonzero difference of per-variable degree <= 2k+4 vanishes on all of them "
        "with probability < (deg/(2k+6))^64 over the seed draw";
  }
  rep.ok = rep.identity_ok && rep.h_sos_ok && rep.degree_ok;
  return rep;
}

}  // namespace sosq
