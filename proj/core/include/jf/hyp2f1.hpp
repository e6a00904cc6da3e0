#pragma once

/**
 * Gauss hypergeometric values 2F1(1/2, k+1; 3/2; x) for integer k >= 0 and
 * x <= 0, the exact family appearing in the bracket terms of the adjoint
 * coefficient formulas.  Small |x| uses the defining series; x < -1/2 is
 * first mapped into (0, 1) by the Pfaff transformation
 *
 *     2F1(a, b; c; x) = (1-x)^(-a) 2F1(a, c-b; c; x/(x-1)),
 *
 * where the transformed series still converges (c-a-b = k + 1/2 > 0).
 * Each evaluation carries a geometric tail bound; failure to reach the
 * precision target throws.
 */

#include "jf/real.hpp"

namespace jf::num {

/// 2F1(1/2, k+1; 3/2; x) at the precision of x.  Requires x <= 0.
Real hyp2f1_half_kp1(long k, const Real& x);

}  // namespace jf::num
