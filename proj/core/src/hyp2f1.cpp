#include "jf/hyp2f1.hpp"

#include <stdexcept>

namespace jf::num {

namespace {

// Series sum_n (a)_n (b)_n / ((c)_n n!) y^n with a = 1/2, c = 3/2, and b
// passed as twice_b / 2.  Successive terms obey
//
//   t_{n+1} = t_n * (2n+1)(2n+twice_b) / ((2n+3)(2n+2)) * y.
//
// For the two instantiations used here (twice_b = 2k+2 and 1-2k, k >= 0)
// the step ratio in absolute value is bounded, for all n >= k, by
// |y| * (1 + k/(n+2)), which gives a certified geometric tail once that
// bound drops below one.  Terms may grow before n reaches k; the bound is
// simply not consulted there.
Real gauss_series(long k, long twice_b, const Real& y, mpfr_prec_t prec) {
  Real cutoff = Real::zero(prec);
  mpfr_set_si_2exp(cutoff.raw(), 1, -static_cast<long>(prec) - 10, MPFR_RNDN);

  Real sum = Real::zero(prec);
  mpfr_set_si(sum.raw(), 1, MPFR_RNDN);
  Real term = Real::zero(prec);
  mpfr_set_si(term.raw(), 1, MPFR_RNDN);
  const Real one(1L);

  const long iter_cap = 400000;
  for (long n = 0; n < iter_cap; ++n) {
    Rational step(Integer(2 * n + 1) * Integer(twice_b + 2 * n),
                  Integer(2 * n + 3) * Integer(2 * n + 2));
    step.canonicalize();
    term = term * Real(step, prec) * y;
    sum += term;

    if (n + 1 >= k) {
      Rational inflate(n + 2 + k, n + 2);
      Real rho = Real(inflate, prec) * abs(y);
      if (rho < one) {
        Real tail = abs(term) * rho / (one - rho);
        if (tail <= cutoff * abs(sum)) return sum;
      }
    }
  }
  throw std::runtime_error("hyp2f1: series did not reach the precision target");
}

}  // namespace

Real hyp2f1_half_kp1(long k, const Real& x) {
  if (k < 0) throw std::domain_error("hyp2f1_half_kp1: k must be >= 0");
  if (x > Real(0L)) throw std::domain_error("hyp2f1_half_kp1: x must be <= 0");
  mpfr_prec_t prec = x.precision() + 32;
  Real xw = Real::zero(prec);
  mpfr_set(xw.raw(), x.raw(), MPFR_RNDN);

  Real minus_half = Real::zero(prec);
  mpfr_set_si_2exp(minus_half.raw(), -1, -1, MPFR_RNDN);
  Real result = Real::zero(prec);
  if (xw >= minus_half) {
    result = gauss_series(k, 2 * k + 2, xw, prec);
  } else {
    // Pfaff: (1-x)^(-1/2) 2F1(1/2, 1/2-k; 3/2; x/(x-1)) with argument in (0,1)
    Real y = xw / (xw - Real(1L));
    result = gauss_series(k, 1 - 2 * k, y, prec) / sqrt(Real(1L) - xw);
  }
  Real out = Real::zero(x.precision());
  mpfr_set(out.raw(), result.raw(), MPFR_RNDN);
  return out;
}

}  // namespace jf::num
