#include "sosq/approx.hpp"

#include <stdexcept>

#include "sosq/symfun.hpp"

namespace sosq {

RatInterval ln_bounds(const Rational& w, const Rational& max_gap) {
  if (w <= 0) throw std::invalid_argument("ln_bounds: need w > 0");
  if (max_gap <= 0) throw std::invalid_argument("ln_bounds: need positive gap");
  if (w == 1) return {Rational(0), Rational(0)};
  if (w < 1) {
    RatInterval inv = ln_bounds(1 / w, max_gap);
    return {-inv.hi, -inv.lo};
  }
  // atanh series: ln w = 2 sum_{j>=0} u^(2j+1)/(2j+1), u = (w-1)/(w+1) in (0,1).
  Rational u = (w - 1) / (w + 1);
  Rational u2 = u * u;
  Rational term = u;  // u^(2j+1)
  Rational lo(0);
  for (long j = 0; j < 100000; ++j) {
    lo += 2 * term / Rational(2 * j + 1);
    term *= u2;
    // tail <= 2 u^(2j+3) / ((2j+3)(1-u^2))
    Rational tail = 2 * term / (Rational(2 * j + 3) * (1 - u2));
    if (tail <= max_gap) return {lo, lo + tail};
  }
  throw std::logic_error("ln_bounds: series did not reach the requested gap");
}

RatInterval sqrt_bounds(const Rational& v, int bits) {
  if (v < 0) throw std::invalid_argument("sqrt_bounds: negative input");
  Int scale = Int(1) << bits;
  Int lo_i = isqrt_floor(rat_floor(v * scale * scale));
  RatInterval out;
  out.lo = rat(lo_i, scale);
  out.hi = rat(lo_i + 1, scale);
  if (out.lo * out.lo > v) out.lo = 0;  // guard tiny v rounding
  return out;
}

namespace {

struct MiddleGeometry {
  Rational l_sq;        // (n/2)^2
  Rational denom;       // L^2 - a^2 > 0
  Rational mu;          // 2 (a^2 - 1/4) / denom
  Rational slope;       // s(y) = slope y + intercept
  Rational intercept;
};

MiddleGeometry middle_geometry(int n, const Rational& a_sq) {
  MiddleGeometry g;
  g.l_sq = rat(static_cast<long>(n) * n, 4);
  g.denom = g.l_sq - a_sq;
  if (g.denom <= 0) throw std::invalid_argument("middle polynomial: a^2 >= (n/2)^2");
  g.mu = 2 * (a_sq - rat(1, 4)) / g.denom;
  g.slope = Rational(-2) / g.denom;
  g.intercept = 1 + 2 * a_sq / g.denom;
  return g;
}

// T_d(x) for rational x via the integer pair recurrence on V_j = den^j T_j:
// V_{j+1} = 2 num V_j - den^2 V_{j-1}.
Rational cheb_value(long d, const Rational& x) {
  if (d == 0) return Rational(1);
  const Int& a = x.get_num();
  const Int& b = x.get_den();
  Int prev(1), cur(a);
  Int b2 = b * b;
  for (long j = 1; j < d; ++j) {
    Int next = 2 * a * cur - b2 * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return rat(cur, int_pow(b, static_cast<unsigned long>(d)));
}

}  // namespace

long middle_d_star(int n, const Rational& eps, const Rational& a_sq) {
  if (eps <= 0 || eps > rat(1, 4)) throw std::invalid_argument("middle_d_star: eps in (0,1/4]");
  MiddleGeometry g = middle_geometry(n, a_sq);
  Rational threshold = 1 / (4 * eps);
  Rational x = 1 + g.mu;
  // T_j(x) by the value recurrence; search even degrees from 2.
  Rational prev(1), cur = x;
  long j = 1;
  while (j < 2000000) {
    Rational next = 2 * x * cur - prev;
    prev = cur;
    cur = next;
    ++j;
    if (j % 2 == 0 && cur >= threshold) return j;
  }
  throw std::logic_error("middle_d_star: search did not terminate");
}

namespace {

// Exact check d <= ceil(3 n ln(1/(2 eps)) / (4 sqrt2 a)) + 1, written on
// squares: the sufficient test (d-1)^2 32 a^2 <= 9 n^2 ln^2 falls back to a
// bracketed ceiling when inconclusive.
bool middle_degree_bound_ok(long d_star, int n, const Rational& eps, const Rational& a_sq) {
  Rational w = 1 / (2 * eps);
  if (w <= 1) return true;  // bound argument nonpositive only for eps >= 1/2
  Rational gap = rat(1, 1000000);
  for (int round = 0; round < 12; ++round) {
    RatInterval ln = ln_bounds(w, gap);
    Rational lhs = Rational(32) * Rational(d_star - 1) * Rational(d_star - 1) * a_sq;
    Rational rhs_lo = Rational(9) * Rational(n) * Rational(n) * ln.lo * ln.lo;
    if (d_star <= 1 || lhs <= rhs_lo) return true;  // d*-1 <= B
    // Bracket ceil(B): B in [B_lo, B_hi].
    Rational bsq_lo = rhs_lo / (Rational(32) * a_sq);
    Rational bsq_hi = Rational(9) * Rational(n) * Rational(n) * ln.hi * ln.hi /
                      (Rational(32) * a_sq);
    RatInterval blo = sqrt_bounds(bsq_lo, 64);
    RatInterval bhi = sqrt_bounds(bsq_hi, 64);
    Int ceil_lo = rat_ceil(blo.lo);
    Int ceil_hi = rat_ceil(bhi.hi);
    if (ceil_lo == ceil_hi) {
      return Int(d_star) <= ceil_lo + 1;
    }
    gap /= 1024;  // tighten and retry
  }
  throw std::logic_error("middle_degree_bound_ok: could not settle the ceiling");
}

}  // namespace

MiddleResult middle_poly(const MiddleParams& params, int rational_samples) {
  const int n = params.n;
  if (n < 1) throw std::invalid_argument("middle_poly: need n >= 1");
  if (params.eps <= 0 || params.eps > rat(1, 4)) {
    throw std::invalid_argument("middle_poly: eps must lie in (0, 1/4]");
  }
  if (params.a_sq < rat(1, 2) || params.a_sq > rat(n, 64)) {
    throw std::invalid_argument("middle_poly: a^2 must lie in [1/2, n/64]");
  }
  MiddleGeometry g = middle_geometry(n, params.a_sq);
  MiddleResult out;
  out.d_star = middle_d_star(n, params.eps, params.a_sq);

  // ghat(u) = eps T_{d*}(u) + y(u) - 1/4 with y(u) = (u - intercept)/slope;
  // then p(z) - 1/4 + z^2 == ghat(s(z^2)).
  UniPoly cheb = cheb_poly(static_cast<int>(out.d_star));
  UniPoly y_of_u =
      UniPoly(std::vector<Rational>{-g.intercept / g.slope, 1 / g.slope});
  UniPoly ghat = cheb * params.eps + y_of_u - UniPoly::constant(rat(1, 4));
  ComposedCert cc = certify_nonneg_squared_affine(ghat, g.slope, g.intercept);
  out.prop1_ok = cc.result.accepted();
  if (out.prop1_ok) out.cert = *cc.result.cert;
  out.p = cc.p + UniPoly::constant(rat(1, 4)) - UniPoly::monomial(2, Rational(1));

  // Properties 2 and 3 at every integer point in range, via the exact value
  // recurrence (p is even, so z >= 0 suffices).
  out.prop2_ok = true;
  out.prop3_ok = true;
  auto check_point = [&](const Rational& zsq) {
    Rational u = g.slope * zsq + g.intercept;
    Rational t = cheb_value(out.d_star, u);
    Rational pv = rat_abs(params.eps * t);
    if (zsq >= params.a_sq && zsq <= g.l_sq && pv > params.eps) out.prop2_ok = false;
    if (zsq >= rat(1, 4) && zsq <= g.l_sq && pv > 2) out.prop3_ok = false;
  };
  for (int z = 0; 4 * z * z <= n * n; ++z) {
    check_point(Rational(static_cast<long>(z) * z));
    ++out.integer_points;
  }
  for (int j = 1; j <= rational_samples; ++j) {
    // z = (j/samples) * (n/2), z^2 = j^2 n^2 / (4 samples^2)
    Rational zsq = rat(static_cast<long>(j) * j * n * n,
                       4L * rational_samples * rational_samples);
    check_point(zsq);
    ++out.rational_samples;
  }
  out.degree_bound_ok = middle_degree_bound_ok(out.d_star, n, params.eps, params.a_sq);
  return out;
}

namespace {

// ceil(X) for X = 3 sqrt(n) ln(1/delta) / (sqrt2 delta), determined exactly
// through interval refinement (X is irrational).
Int l1_degree_target(int n, const Rational& delta) {
  Rational w = 1 / delta;
  Rational gap = rat(1, 1 << 20);
  for (int round = 0; round < 16; ++round) {
    RatInterval ln = ln_bounds(w, gap);
    // X^2 = 9 n ln^2 / (2 delta^2)
    Rational xsq_lo = Rational(9) * Rational(n) * ln.lo * ln.lo / (2 * delta * delta);
    Rational xsq_hi = Rational(9) * Rational(n) * ln.hi * ln.hi / (2 * delta * delta);
    Int clo = rat_ceil(sqrt_bounds(xsq_lo, 64).lo);
    Int chi = rat_ceil(sqrt_bounds(xsq_hi, 64).hi);
    if (clo == chi) return clo;
    gap /= 1024;
  }
  throw std::logic_error("l1_degree_target: could not settle the ceiling");
}

}  // namespace

L1Cert l1_approx_build(int n, const Rational& delta) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("l1_approx_build: n must be odd");
  if (delta > rat(1, 4)) {
    throw std::invalid_argument("l1_approx_build: delta <= 1/4 violated");
  }
  if (delta <= 0 || delta * delta * Rational(n) < 32) {
    throw std::invalid_argument("l1_approx_build: 8/sqrt(2n) <= delta violated");
  }
  L1Cert cert;
  cert.n = n;
  cert.delta = delta;
  cert.eps_used = delta / 2;
  Int target = l1_degree_target(n, delta);

  // Paper choice a^2 = delta^2 n / 64; nudge upward (shrinking the degree)
  // until the Chebyshev degree meets the half-degree target.
  Rational a_sq = delta * delta * Rational(n) / 64;
  Rational cap = rat(n, 64);
  long d_star = 0;
  bool found = false;
  for (int attempt = 0; attempt < 64; ++attempt) {
    d_star = middle_d_star(n, cert.eps_used, a_sq);
    if (Int(d_star) <= target) {
      found = true;
      break;
    }
    a_sq = a_sq * rat(9, 8);
    if (a_sq > cap) {
      a_sq = cap;
      d_star = middle_d_star(n, cert.eps_used, a_sq);
      found = Int(d_star) <= target;
      break;
    }
  }
  cert.a_sq_used = a_sq;
  MiddleParams mp{n, cert.eps_used, a_sq};
  MiddleResult mid = middle_poly(mp);
  if (!mid.prop1_ok) throw std::logic_error("l1_approx_build: middle certificate rejected");

  // h(z) = (z - n/2)^2 - 1/4 + p(z - n/2) = g(z - n/2) for g = p - 1/4 + z^2.
  UniPoly g = mid.p + UniPoly::monomial(2, Rational(1)) - UniPoly::constant(rat(1, 4));
  Rational shift = -rat(n, 2);
  cert.h = g.shift(shift);
  cert.nonneg.even_part = mid.cert.even_part.is_constant()
                              ? mid.cert.even_part
                              : mid.cert.even_part.shift(shift);
  cert.nonneg.odd_part = (mid.cert.odd_part == g) ? cert.h : mid.cert.odd_part.shift(shift);
  cert.nonneg.sturm_root_count_of_odd_part = mid.cert.sturm_root_count_of_odd_part;
  cert.degree_bound = mid.d_star;
  cert.degree_ok = found && Int(cert.degree_bound) <= target;

  UniPoly f = fk_poly(n, n / 2);
  auto [linf, l1] = hyper_error(cert.h, f, n);
  cert.l1_error = l1;
  cert.l1_ok = l1 <= delta * rat_pow(Rational(2), n);
  return cert;
}

UniPoly sampling_expected_poly(int n, int q, const std::vector<Rational>& leaf_values) {
  if (q < 0 || q > n) throw std::invalid_argument("sampling_expected_poly: need 0 <= q <= n");
  if (leaf_values.size() != static_cast<size_t>(q) + 1) {
    throw std::invalid_argument("sampling_expected_poly: need q+1 leaf values");
  }
  UniPoly acc;
  Rational total = Rational(binomial(static_cast<unsigned long>(n),
                                     static_cast<unsigned long>(q)));
  for (int j = 0; j <= q; ++j) {
    if (leaf_values[static_cast<size_t>(j)] == 0) continue;
    // C(w, j) C(n-w, q-j) as a polynomial in w.
    UniPoly ones = falling_factorial(j) / Rational(factorial(static_cast<unsigned long>(j)));
    UniPoly zeros = falling_factorial(q - j).compose_affine(Rational(-1), Rational(n)) /
                    Rational(factorial(static_cast<unsigned long>(q - j)));
    acc = acc + ones * zeros * (leaf_values[static_cast<size_t>(j)] / total);
  }
  return acc;
}

SamplingResult sampling_approx_build(int n, int k, const Rational& delta, int c_queries,
                                     std::optional<Rational> big_value,
                                     std::optional<Rational> threshold) {
  if (100L * k >= 49L * n) {
    throw std::invalid_argument("sampling_approx_build: need k < 0.49 n");
  }
  if (c_queries < 1) throw std::invalid_argument("sampling_approx_build: c_queries >= 1");
  if (delta <= 0 || delta >= 1) throw std::invalid_argument("sampling_approx_build: delta in (0,1)");
  // q = c * ceil(ln(1/delta)); the ceiling is settled by interval refinement.
  RatInterval ln = ln_bounds(1 / delta, rat(1, 1 << 24));
  Int clo = rat_ceil(ln.lo);
  Int chi = rat_ceil(ln.hi);
  if (clo != chi) throw std::logic_error("sampling_approx_build: log ceiling unsettled");
  long q = c_queries * clo.get_si();
  if (q < 1) q = 1;
  if (q > n) throw std::invalid_argument("sampling_approx_build: q exceeds n");

  SamplingResult out;
  out.queries = q;
  out.big_value = big_value.value_or(rat(static_cast<long>(n) * n, 4));
  out.threshold = threshold.value_or(rat(1, 2 * q));
  std::vector<Rational> leaves(static_cast<size_t>(q) + 1, Rational(0));
  for (long j = 0; j <= q; ++j) {
    Rational gap = rat_abs(rat(j, q) - rat(k, n));
    if (gap <= out.threshold) leaves[static_cast<size_t>(j)] = out.big_value;
  }
  out.h = sampling_expected_poly(n, static_cast<int>(q), leaves);
  UniPoly f = fk_poly(n, k);
  out.l1_direct = hyper_error(out.h, f, n).second;
  out.l1_induced = hyper_error(out.h, UniPoly::zero(), n).second;
  return out;
}

}  // namespace sosq
