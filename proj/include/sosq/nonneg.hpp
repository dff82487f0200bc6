#pragma once

// Exact global-nonnegativity certificates for univariate polynomials:
// squarefree decomposition, odd-multiplicity part, Sturm root count.
// A numeric two-squares witness (with an exact residual bound) complements
// the rigorous certificate.

#include <optional>
#include <utility>

#include "sosq/sturm.hpp"
#include "sosq/unipoly.hpp"

namespace sosq {

struct NonnegCert {
  // input == even_part^2 * odd_part, exactly.
  UniPoly even_part;
  UniPoly odd_part;
  long sturm_root_count_of_odd_part = 0;
};

struct NonnegFailure {
  // p(sample) < 0; [lo, hi] brackets a sign change when one exists.
  Rational lo, hi, sample;
};

struct CertifyResult {
  std::optional<NonnegCert> cert;
  std::optional<NonnegFailure> failure;
  bool accepted() const { return cert.has_value(); }
};

// Succeeds iff p(z) >= 0 for all real z.
CertifyResult certify_nonneg(const UniPoly& p);

// Checks the certificate identity and validity conditions against p.
bool nonneg_cert_matches(const NonnegCert& cert, const UniPoly& p);

// Builds p(z) = ghat(slope*z^2 + intercept) together with its certificate.
// All root counting runs on ghat, which typically has far smaller
// coefficients than the expanded p; the certificate semantics are identical
// (p's odd part is certified to have no real roots).
struct ComposedCert {
  UniPoly p;
  CertifyResult result;
};
ComposedCert certify_nonneg_squared_affine(const UniPoly& ghat, const Rational& slope,
                                           const Rational& intercept);

// Best-effort numeric decomposition p ~ a^2 + b^2 via complex root pairing
// and rational rounding. residual_bound is the exact max-coefficient norm
// of p - a^2 - b^2. converged == false when root finding failed to reach
// tol; the rigorous nonnegativity proof is NonnegCert either way.
struct TwoSquares {
  UniPoly a, b;
  Rational residual_bound;
  bool converged = false;
};
TwoSquares sos_two_squares(const UniPoly& p, const Rational& tol);

}  // namespace sosq
