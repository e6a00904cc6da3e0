#pragma once

/**
 * Weight-raising differential operators on q,zeta-expansions:
 *
 *   serre_derivative   D_tau - (k/12) E2
 *   heat_shift         (4m D_tau - D_z^2) - (m(2k-1)/6) E2
 *   oberdieck          D_tau - (k/12) E2 - J1 D_z + m J2
 *   jacobi_serre       D_tau - (k/12) E2
 *                        + (1/(1-4m)) (D_z^2 - J1 D_z + m J2 - (m/6) E2)
 *
 * all mapping weight k, index m to weight k+2, index m.  jacobi_serre is
 * additionally recomputed as (heat_shift - oberdieck)/(4m-1); the two
 * paths must agree coefficient for coefficient or PathMismatch is thrown
 * (that indicates an internal bug, never a property of the input).
 *
 * The J1 D_z term needs every q-level of D_z f to vanish at zeta = 1,
 * which holds for r <-> -r symmetric inputs; otherwise the exact division
 * by (1 - zeta) fails with NonDivisibleError.
 */

#include "jf/forms.hpp"
#include "jf/qzseries.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace jf::ops {

struct PathMismatch : SeriesError {
  using SeriesError::SeriesError;
};

QZSeries serre_derivative(int k, const QZSeries& f);
QZSeries heat_shift(int k, int m, const QZSeries& f);
QZSeries oberdieck(int k, int m, const QZSeries& f);
QZSeries jacobi_serre(int k, int m, const QZSeries& f);

/// One verified identity: residual is the left side minus the right side,
/// so exact means residual == 0 below the working order.  zero_at_z0
/// reports whether restrict_z0(residual) vanishes, which is the weaker
/// collapse property quoted for the quasi-form equation.
struct IdentityReport {
  std::string name;
  bool exact = false;
  bool zero_at_z0 = false;
  QZSeries residual;
  std::optional<std::pair<Rational, long>> first_failure;  // (n, r)
};

/// The three classical Eisenstein identities under the Serre derivative,
/// with the E2 equation in its sign-consistent form
/// serre(E2) + E2^2/12 = -E4/12 (the form forced by the q^0 coefficient
/// and by the z = 0 collapse of the index-1 system below).
std::vector<IdentityReport> verify_ramanujan(const Rational& order);

/// The index-1 analogues: the E2_1 equation (under the convention
/// E4' = D_tau E4) plus the E4_1 and E6_1 equations.
std::vector<IdentityReport> verify_ramanujan_jacobi(const Rational& order);

}  // namespace jf::ops
