#pragma once

/**
 * Double-exponential quadrature at MPFR precision.  Levels halve the step
 * and reuse nothing but the previous estimate; refinement stops when two
 * successive levels agree to the relative target.  Individual terms are
 * cut off once they fall below 2^-(prec+20) of the running sum, so decay
 * of the integrand, not an interval cap, ends each sweep.
 */

#include "jf/real.hpp"

#include <functional>

namespace jf::num {

struct QuadratureResult {
  Real value;
  Real error_estimate;  // |last level delta|
  int levels = 0;
  bool converged = false;
};

using Integrand = std::function<Real(const Real&)>;

/// tanh-sinh rule on [a, b].
QuadratureResult integrate_finite(const Integrand& f, const Real& a, const Real& b,
                                  const Real& target_rel,
                                  mpfr_prec_t prec = Real::default_precision(),
                                  int max_level = 12);

/// exp-sinh rule on (0, infinity).
QuadratureResult integrate_zero_inf(const Integrand& f, const Real& target_rel,
                                    mpfr_prec_t prec = Real::default_precision(),
                                    int max_level = 12);

/// sinh-sinh rule on the whole real line.
QuadratureResult integrate_real_line(const Integrand& f, const Real& target_rel,
                                     mpfr_prec_t prec = Real::default_precision(),
                                     int max_level = 12);

}  // namespace jf::num
