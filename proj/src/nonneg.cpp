#include "sosq/nonneg.hpp"

#include <algorithm>
#include <cassert>
#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace sosq {

namespace {

UniPoly exact_div(const UniPoly& num, const UniPoly& den) {
  auto [q, r] = poly_divide(num, den);
  if (!r.is_zero()) throw std::logic_error("nonneg: non-exact division");
  return q;
}

// A rational sample with p(sample) < 0 plus a bracketing interval.
NonnegFailure negativity_witness(const UniPoly& p) {
  NonnegFailure f;
  Rational b = cauchy_root_bound(p) + 1;
  std::vector<Rational> candidates = {Rational(0), -b, b};
  for (long k = 1; k <= 8; ++k) {
    candidates.push_back(Rational(k));
    candidates.push_back(Rational(-k));
  }
  std::optional<Rational> neg, pos;
  for (const auto& c : candidates) {
    int s = sign(p.eval(c));
    if (s < 0 && !neg) neg = c;
    if (s >= 0 && !pos) pos = c;
  }
  if (!neg) {
    // Fallback: scan a denser grid inside the root bound.
    for (long parts = 16; parts <= (1 << 16) && !neg; parts *= 4) {
      for (long j = -parts; j <= parts; ++j) {
        Rational c = b * Rational(j) / Rational(parts);
        if (sign(p.eval(c)) < 0) {
          neg = c;
          break;
        }
      }
    }
  }
  if (!neg) throw std::logic_error("negativity_witness: no negative sample found");
  f.sample = *neg;
  if (pos) {
    f.lo = std::min(*neg, *pos);
    f.hi = std::max(*neg, *pos);
  } else {
    f.lo = *neg - 1;
    f.hi = *neg + 1;
  }
  return f;
}

// Bisect down to an interval holding exactly one root of the squarefree
// polynomial q, with q of opposite signs at the endpoints.
std::pair<Rational, Rational> isolate_one_root(const UniPoly& q) {
  Rational lo = -cauchy_root_bound(q) - 1;
  Rational hi = cauchy_root_bound(q) + 1;
  auto count = [&](const Rational& a, const Rational& b) {
    return count_real_roots_in(q, a, b);
  };
  while (true) {
    long c = count(lo, hi);
    assert(c >= 1);
    if (c == 1 && sign(q.eval(lo)) * sign(q.eval(hi)) < 0) return {lo, hi};
    Rational mid = (lo + hi) / 2;
    if (q.eval(mid) == 0) mid = (lo + 2 * hi) / 3;
    if (q.eval(mid) == 0) mid = (2 * lo + hi) / 3;
    assert(q.eval(mid) != 0);
    if (count(lo, mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
}

struct SplitParts {
  UniPoly even_part, odd_part;
};

SplitParts split_even_odd(const UniPoly& p, const SquarefreeDecomp& dec) {
  UniPoly even = UniPoly::constant(Rational(1));
  for (size_t i = 0; i < dec.factors.size(); ++i) {
    size_t mult = i + 1;
    const UniPoly& f = dec.factors[i];
    if (f.degree() <= 0) continue;
    for (size_t e = 0; e < mult / 2; ++e) even = even * f;
  }
  UniPoly odd = exact_div(p, even * even);
  return {even, odd};
}

}  // namespace

bool nonneg_cert_matches(const NonnegCert& cert, const UniPoly& p) {
  if (cert.even_part * cert.even_part * cert.odd_part != p) return false;
  if (cert.sturm_root_count_of_odd_part != 0) return false;
  if (cert.odd_part.is_zero()) return p.is_zero();
  return sign(cert.odd_part.leading()) > 0;
}

CertifyResult certify_nonneg(const UniPoly& p) {
  CertifyResult out;
  if (p.is_zero()) {
    out.cert = NonnegCert{UniPoly::zero(), UniPoly::constant(Rational(1)), 0};
    return out;
  }
  if (p.is_constant()) {
    if (p.coeff(0) > 0) {
      out.cert = NonnegCert{UniPoly::constant(Rational(1)), p, 0};
    } else {
      out.failure = NonnegFailure{Rational(-1), Rational(1), Rational(0)};
    }
    return out;
  }
  if (p.degree() % 2 == 1 || sign(p.leading()) < 0) {
    out.failure = negativity_witness(p);
    return out;
  }
  SquarefreeDecomp dec = squarefree_decompose(p);
  SplitParts parts = split_even_odd(p, dec);
  long roots = count_real_roots(parts.odd_part);
  bool positive = parts.odd_part.is_constant() ? parts.odd_part.coeff(0) > 0
                                               : parts.odd_part.eval(Rational(0)) > 0;
  if (roots == 0 && positive) {
    out.cert = NonnegCert{parts.even_part, parts.odd_part, roots};
    return out;
  }
  // The odd part changes sign at each of its (simple) real roots.
  auto [lo, hi] = isolate_one_root(parts.odd_part);
  NonnegFailure f;
  f.lo = lo;
  f.hi = hi;
  f.sample = (sign(parts.odd_part.eval(lo)) < 0) ? lo : hi;
  // The sample witnesses odd_part < 0; make sure p itself is negative there
  // (the even part cannot vanish at a point where the odd part does not).
  if (sign(p.eval(f.sample)) >= 0) {
    // even_part vanished at the chosen endpoint; nudge inside.
    Rational step = (hi - lo) / 16;
    Rational z = f.sample + (f.sample == lo ? step : -step);
    for (int tries = 0; tries < 64 && sign(p.eval(z)) >= 0; ++tries) {
      step = step / 2;
      z = f.sample + (f.sample == lo ? step : -step);
    }
    f.sample = z;
  }
  out.failure = f;
  return out;
}

ComposedCert certify_nonneg_squared_affine(const UniPoly& ghat, const Rational& slope,
                                           const Rational& intercept) {
  if (slope == 0) throw std::invalid_argument("certify_nonneg_squared_affine: zero slope");
  ComposedCert out;
  UniPoly g_of_y = ghat.compose_affine(slope, intercept);
  out.p = g_of_y.substitute_square();
  const UniPoly& p = out.p;
  if (p.is_constant() || ghat.is_constant()) {
    out.result = certify_nonneg(p);
    return out;
  }
  if (p.degree() % 2 == 1 || sign(p.leading()) < 0) {
    out.result.failure = negativity_witness(p);
    return out;
  }
  if (sign(p.eval(Rational(0))) < 0) {
    NonnegFailure f;
    f.sample = Rational(0);
    f.lo = Rational(-1);
    f.hi = Rational(1);
    out.result.failure = f;
    return out;
  }
  // The image of z -> slope*z^2 + intercept is a closed half-line starting
  // at u0 = intercept. p >= 0 on R iff ghat >= 0 there, which (given the
  // endpoint and leading-behavior checks above) holds iff the odd part of
  // ghat has no root in the open interior.
  const bool left_side = sign(slope) < 0;
  // Strip roots at u0: they fold into even multiplicity through z^2.
  UniPoly w = ghat;
  UniPoly lin = UniPoly::variable() - UniPoly::constant(intercept);
  int mult_at_u0 = 0;
  while (!w.is_constant() && w.eval(intercept) == 0) {
    w = exact_div(w, lin);
    ++mult_at_u0;
  }
  PrsScan scan = prs_scan(
      w, w.derivative(),
      left_side
          ? std::vector<SturmPoint>{SturmPoint::neg_inf(), SturmPoint::at(intercept)}
          : std::vector<SturmPoint>{SturmPoint::at(intercept), SturmPoint::pos_inf()});
  long interior = w.degree() > 0 ? scan.variations[0] - scan.variations[1] : 0;
  bool w_squarefree = scan.last.degree() <= 0;

  if (interior > 0) {
    // Some odd-multiplicity interior root may exist. Decompose to find out.
    SquarefreeDecomp dec = squarefree_decompose(ghat);
    long odd_interior = 0;
    const UniPoly* bad_factor = nullptr;
    for (size_t i = 0; i < dec.factors.size(); ++i) {
      if ((i + 1) % 2 == 0 || dec.factors[i].degree() <= 0) continue;
      long c = count_roots_open_halfline(dec.factors[i], intercept, left_side);
      odd_interior += c;
      if (c > 0 && !bad_factor) bad_factor = &dec.factors[i];
    }
    if (odd_interior > 0) {
      // Isolate a bad u-root strictly inside the domain half-line, then map
      // it back to a z-interval and dig for a negative sample of p.
      UniPoly w2 = *bad_factor;
      while (!w2.is_constant() && w2.eval(intercept) == 0) w2 = exact_div(w2, lin);
      Rational b2 = cauchy_root_bound(w2) + 1;
      Rational neg_b2 = -b2;
      Rational below = intercept - 1;
      Rational above = intercept + 1;
      Rational ulo = left_side ? std::min(neg_b2, below) : intercept;
      Rational uhi = left_side ? intercept : std::max(b2, above);
      auto count2 = [&](const Rational& a2, const Rational& c2) {
        return count_real_roots_in(w2, a2, c2);
      };
      auto pick_mid = [&](const Rational& a2, const Rational& c2) {
        Rational mid = (a2 + c2) / 2;
        if (w2.eval(mid) == 0) mid = (a2 + 2 * c2) / 3;
        if (w2.eval(mid) == 0) mid = (2 * a2 + c2) / 3;
        return mid;
      };
      while (count2(ulo, uhi) > 1 || uhi - ulo > 1) {
        Rational mid = pick_mid(ulo, uhi);
        if (count2(ulo, mid) >= 1) {
          uhi = mid;
        } else {
          ulo = mid;
        }
      }
      NonnegFailure f;
      bool found = false;
      for (int rounds = 0; rounds < 80 && !found; ++rounds) {
        Rational ylo = (ulo - intercept) / slope;
        Rational yhi = (uhi - intercept) / slope;
        if (ylo > yhi) std::swap(ylo, yhi);
        if (ylo < 0) ylo = Rational(0);
        Int scale = Int(1) << 32;
        Rational zlo = rat(isqrt_floor(rat_floor(ylo * scale * scale)), scale);
        Rational zhi = rat(isqrt_floor(rat_ceil(yhi * scale * scale)) + 1, scale);
        f.lo = zlo;
        f.hi = zhi;
        for (long j = 1; j < 64; ++j) {
          Rational z = zlo + (zhi - zlo) * Rational(j) / Rational(64);
          if (sign(p.eval(z)) < 0) {
            f.sample = z;
            found = true;
            break;
          }
        }
        if (!found) {
          // Tighten the u-interval around the root and retry.
          Rational mid = pick_mid(ulo, uhi);
          if (count2(ulo, mid) >= 1) {
            uhi = mid;
          } else {
            ulo = mid;
          }
        }
      }
      if (!found) throw std::logic_error("composed certify: no negative sample found");
      out.result.failure = f;
      return out;
    }
    // Interior roots all have even multiplicity: fall through to accept.
  }

  NonnegCert cert;
  if (w_squarefree && mult_at_u0 <= 1 && interior == 0) {
    // ghat = (u - u0)^m0 * w with w squarefree away from u0; since any root
    // of ghat at u0 folds to even multiplicity in z, p's odd part is p / z^(2*...)
    if (mult_at_u0 == 0) {
      cert.even_part = UniPoly::constant(Rational(1));
      cert.odd_part = p;
    } else {
      cert.even_part = UniPoly::variable();
      cert.odd_part = exact_div(p, UniPoly::monomial(2, Rational(1)));
    }
    cert.sturm_root_count_of_odd_part = 0;
    out.result.cert = cert;
    return out;
  }
  // General assembly through the squarefree factors of ghat.
  SquarefreeDecomp dec = squarefree_decompose(ghat);
  UniPoly even = UniPoly::constant(Rational(1));
  long odd_root_count = 0;
  int z_mult = 0;
  for (size_t i = 0; i < dec.factors.size(); ++i) {
    size_t mult = i + 1;
    UniPoly f = dec.factors[i];
    if (f.degree() <= 0) continue;
    int m0 = 0;
    while (!f.is_constant() && f.eval(intercept) == 0) {
      f = exact_div(f, lin);
      ++m0;
    }
    z_mult += static_cast<int>(mult) * 2 * m0;
    UniPoly fz = f.compose_affine(slope, intercept).substitute_square();
    for (size_t e = 0; e < mult / 2; ++e) even = even * fz;
    if (mult % 2 == 1 && f.degree() > 0) {
      odd_root_count += 2 * count_roots_open_halfline(f, intercept, left_side);
    }
  }
  even = even * UniPoly::monomial(z_mult / 2, Rational(1));
  cert.even_part = even;
  cert.odd_part = exact_div(p, even * even);
  cert.sturm_root_count_of_odd_part = odd_root_count;
  if (odd_root_count == 0 && sign(cert.odd_part.is_constant() ? cert.odd_part.coeff(0)
                                                              : cert.odd_part.leading()) > 0) {
    out.result.cert = cert;
  } else {
    out.result.failure = negativity_witness(p);
  }
  return out;
}

TwoSquares sos_two_squares(const UniPoly& p, const Rational& tol) {
  TwoSquares out;
  out.a = UniPoly::zero();
  out.b = UniPoly::zero();
  if (p.is_zero()) {
    out.residual_bound = Rational(0);
    out.converged = true;
    return out;
  }
  if (p.is_constant()) {
    Rational root;
    if (rat_is_square(p.coeff(0), &root)) {
      out.a = UniPoly::constant(root);
      out.residual_bound = Rational(0);
      out.converged = true;
      return out;
    }
  }
  const int d = p.degree();
  if (d % 2 == 1 || sign(p.leading()) < 0) {
    throw std::invalid_argument("sos_two_squares: polynomial cannot be a sum of squares");
  }

  auto residual = [&](const UniPoly& a, const UniPoly& b) {
    UniPoly r = p - a * a - b * b;
    Rational m(0);
    for (int i = 0; i <= std::max(r.degree(), 0); ++i) {
      Rational v = rat_abs(r.coeff(i));
      if (v > m) m = v;
    }
    return m;
  };

  // Companion-matrix roots in double precision.
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    comp(i, d - 1) = -rat_to_double(p.coeff(i) / p.leading());
    if (i + 1 < d) comp(i + 1, i) = 1.0;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) {
    out.residual_bound = residual(out.a, out.b);
    out.converged = false;
    return out;
  }
  std::vector<std::complex<double>> roots;
  for (int i = 0; i < d; ++i) roots.push_back(es.eigenvalues()[i]);
  // Pair roots: keep those in the closed upper half plane; real roots of a
  // nonnegative polynomial come in even multiplicities, so keep half of
  // each real cluster.
  std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  std::vector<std::complex<double>> kept;
  std::vector<std::complex<double>> reals;
  for (const auto& r : roots) {
    if (r.imag() > 1e-9) {
      kept.push_back(r);
    } else if (r.imag() >= -1e-9) {
      reals.push_back(std::complex<double>(r.real(), 0.0));
    }
  }
  for (size_t i = 0; i + 1 < reals.size(); i += 2) {
    kept.push_back((reals[i] + reals[i + 1]) / 2.0);
  }
  if (2 * kept.size() != static_cast<size_t>(d)) {
    out.residual_bound = residual(out.a, out.b);
    out.converged = false;
    return out;
  }
  // Q(z) = sqrt(lc) * prod (z - r); p ~ |Q|^2 = (Re Q)^2 + (Im Q)^2.
  std::vector<std::complex<double>> q = {std::complex<double>(1.0, 0.0)};
  for (const auto& r : kept) {
    q.insert(q.begin(), std::complex<double>(0.0, 0.0));
    for (size_t i = 0; i + 1 < q.size(); ++i) q[i] -= r * q[i + 1];
  }
  double lead = std::sqrt(rat_to_double(p.leading()));

  // Round coefficients to rationals with denominators 2^bits, refining the
  // precision until the exact residual meets tol (or we give up).
  auto round_to = [](double v, int bits) {
    Rational exact(v);  // doubles convert exactly
    Int den = Int(1) << bits;
    Int num = rat_floor(exact * Rational(den) + rat(1, 2));
    return rat(num, den);
  };
  Rational best_res(-1);
  for (int bits : {8, 16, 24, 32, 44}) {
    std::vector<Rational> ac(q.size()), bc(q.size());
    for (size_t i = 0; i < q.size(); ++i) {
      ac[i] = round_to(q[i].real() * lead, bits);
      bc[i] = round_to(q[i].imag() * lead, bits);
    }
    UniPoly acand(std::move(ac)), bcand(std::move(bc));
    Rational res = residual(acand, bcand);
    if (best_res < 0 || res < best_res) {
      best_res = res;
      out.a = acand;
      out.b = bcand;
    }
    if (best_res <= tol) break;
  }
  out.residual_bound = best_res;
  out.converged = best_res <= tol;
  return out;
}

}  // namespace sosq
