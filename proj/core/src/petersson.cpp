#include "jf/petersson.hpp"

#include <stdexcept>

#include "jf/hyp2f1.hpp"

namespace jf::num {

Real erf_integral_closed(long k, const Rational& m, const Rational& big_m,
                         mpfr_prec_t prec) {
  if (k < 0) throw std::domain_error("erf_integral_closed: k must be >= 0");
  if (sgn(m) <= 0 || sgn(big_m) <= 0)
    throw std::domain_error("erf_integral_closed: m and M must be positive");
  mpfr_prec_t wprec = prec + 32;

  Real four_pi_m = Real(4L) * Real::pi(wprec) * Real(big_m, wprec);
  Rational arg = Rational(-1) / (Rational(4) * m * big_m);
  arg.canonicalize();
  Real hyp = hyp2f1_half_kp1(k, Real(arg, wprec));

  Real value = Real(2L) / sqrt(Real(m, wprec));
  value = value * Real(Rational(factorial(static_cast<unsigned long>(k))), wprec);
  value = value / pow(four_pi_m, k + 1);
  value = value * hyp;

  Real out = Real::zero(prec);
  mpfr_set(out.raw(), value.raw(), MPFR_RNDN);
  return out;
}

QuadratureResult erf_integral_quadrature(long k, const Rational& m,
                                         const Rational& big_m,
                                         const Real& target_rel,
                                         mpfr_prec_t prec) {
  if (k < 0) throw std::domain_error("erf_integral_quadrature: k must be >= 0");
  if (sgn(m) <= 0 || sgn(big_m) <= 0)
    throw std::domain_error("erf_integral_quadrature: m and M must be positive");
  Real pi = Real::pi(prec);
  Real four_pi_big_m = Real(4L) * pi * Real(big_m, prec);
  Real pi_over_m = pi / Real(m, prec);
  long twice_pow = 2 * k - 1;

  Integrand f = [=](const Real& v) {
    return pow_half(v, twice_pow) * exp(-(four_pi_big_m * v)) *
           erf(sqrt(pi_over_m * v));
  };
  return integrate_zero_inf(f, target_rel, prec);
}

Real petersson_monomial_closed(long k, long m, long l, long w,
                               mpfr_prec_t prec) {
  long disc = 4 * l * m - w * w;
  if (disc <= 0)
    throw std::domain_error("petersson_monomial_closed: 4lm - w^2 must be positive");
  mpfr_prec_t wprec = prec + 32;

  Real value = pow(Real(Rational(m), wprec), k) * gamma_half(2 * k + 1, wprec);
  value = value / (Real(2L) * pow_half(Real::pi(wprec), 2 * k + 1));
  value = value / pow_half(Real(Rational(disc), wprec), 2 * k + 1);

  Real out = Real::zero(prec);
  mpfr_set(out.raw(), value.raw(), MPFR_RNDN);
  return out;
}

QuadratureResult petersson_monomial_quadrature(long k, long m, long l, long w,
                                               const Real& target_rel,
                                               mpfr_prec_t prec) {
  if (m <= 0 || l <= 0)
    throw std::domain_error("petersson_monomial_quadrature: need m > 0, l > 0");
  Real pi = Real::pi(prec);
  Real four_pi = Real(4L) * pi;
  Real cl = four_pi * Real(l);
  Real cw = four_pi * Real(w);
  Real cm = four_pi * Real(m);
  Real inner_target = target_rel * Real(Rational(1, 16), prec);

  Integrand outer = [=](const Real& v) {
    Real cm_over_v = cm / v;
    Integrand inner = [&](const Real& y) {
      return exp(-(cw * y) - cm_over_v * y * y);
    };
    QuadratureResult row = integrate_real_line(inner, inner_target, prec);
    return pow(v, k - 1) * exp(-(cl * v)) * row.value;
  };
  return integrate_zero_inf(outer, target_rel, prec);
}

}  // namespace jf::num
