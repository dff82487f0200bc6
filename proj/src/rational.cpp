#include "sosq/rational.hpp"

namespace sosq {

Rational rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator in rational literal: " + s);
  }
  q.canonicalize();
  return q;
}

Rational rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rat_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  bool inv = e < 0;
  unsigned long ue = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), ue);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), ue);
  if (inv) {
    if (base == 0) throw std::invalid_argument("0 to a negative power");
    out = 1 / out;
  }
  out.canonicalize();
  return out;
}

Int int_pow(const Int& base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

Int binomial(unsigned long n, unsigned long k) {
  if (k > n) return Int(0);
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Int factorial(unsigned long n) {
  Int out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Int rat_floor(const Rational& q) {
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Int rat_ceil(const Rational& q) {
  Int out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

long ceil_log2_inverse(const Rational& q) {
  if (q <= 0 || q > 1) throw std::invalid_argument("ceil_log2_inverse needs q in (0,1]");
  long m = 0;
  Int p(1);  // 2^m * num vs den: want 2^m >= den/num
  const Int& num = q.get_num();
  const Int& den = q.get_den();
  while (p * num < den) {
    p *= 2;
    ++m;
  }
  return m;
}

Int isqrt_floor(const Int& v) {
  if (v < 0) throw std::invalid_argument("isqrt of negative");
  Int out;
  mpz_sqrt(out.get_mpz_t(), v.get_mpz_t());
  return out;
}

bool rat_is_square(const Rational& q, Rational* root) {
  if (q < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
    return false;
  }
  if (root) {
    Int rn = isqrt_floor(q.get_num());
    Int rd = isqrt_floor(q.get_den());
    *root = rat(rn, rd);
  }
  return true;
}

double rat_to_double(const Rational& q) { return q.get_d(); }

}  // namespace sosq
