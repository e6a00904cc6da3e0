#pragma once

#include "jf/quadrature.hpp"
#include "jf/real.hpp"

namespace jf::num {

// Building blocks for inner products of exponential monomials
// q^l zeta^w = e(l tau + w z) against themselves over the Jacobi
// fundamental domain, plus the error-function integral that shows up in
// the incomplete part.  Each quantity comes in a closed form and an
// independent quadrature evaluation so they can be cross-checked.

// integral_0^inf v^(k-1/2) e^(-4 pi v M) erf(sqrt(pi v / m)) dv
//   = (2/sqrt(m)) Gamma(k+1) / (4 pi M)^(k+1) * 2F1(1/2, k+1; 3/2; -1/(4mM))
// Requires m > 0, M > 0, k >= 0.
Real erf_integral_closed(long k, const Rational& m, const Rational& big_m,
                         mpfr_prec_t prec = Real::default_precision());

QuadratureResult erf_integral_quadrature(
    long k, const Rational& m, const Rational& big_m, const Real& target_rel,
    mpfr_prec_t prec = Real::default_precision());

// Petersson norm of the index-m monomial at (l, w):
//   m^k Gamma(k+1/2) / (2 pi^(k+1/2) (4 l m - w^2)^(k+1/2))
// Requires 4 l m - w^2 > 0.
Real petersson_monomial_closed(long k, long m, long l, long w,
                               mpfr_prec_t prec = Real::default_precision());

// Same quantity as the double integral
//   integral_0^inf dv integral_R dy v^(k-1) e^(-4 pi l v - 4 pi w y - 4 pi m y^2 / v)
// evaluated with nested one-dimensional quadratures.
QuadratureResult petersson_monomial_quadrature(
    long k, long m, long l, long w, const Real& target_rel,
    mpfr_prec_t prec = Real::default_precision());

}  // namespace jf::num
