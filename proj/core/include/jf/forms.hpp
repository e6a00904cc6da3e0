#pragma once

/**
 * Catalog of classical expansions: Eisenstein series, eta products, the
 * square of the odd Jacobi theta function, deformed Eisenstein series,
 * the elliptic Weierstrass function in its Fourier normalization, and the
 * standard weak/holomorphic/cusp Jacobi forms of index 1 built from them.
 *
 * Every builder takes a truncation order and returns a series exact
 * strictly below that order.  Builders are deterministic: rebuilding at a
 * larger order extends, never changes, previously computed coefficients.
 */

#include "jf/qzseries.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jf::forms {

/// Bernoulli number B_n, standard convention (B_0 = 1, B_1 = -1/2).
Rational bernoulli(unsigned n);

/// Divisor power sum sigma_k(n) = sum_{d | n} d^k for n >= 1.
Integer sigma(unsigned k, unsigned long n);

/// sigma_1 for all 1 <= n <= nmax by sieving; index 0 unused.
std::vector<Integer> sigma1_table(unsigned long nmax);

/// E_k = 1 - (2k / B_k) sum sigma_{k-1}(n) q^n for even k >= 2.
QZSeries eisenstein(int k, const Rational& order);

/// Euler product prod_{n >= 1} (1 - q^n) via the pentagonal number series.
QZSeries euler_product(const Rational& order);

/// eta^s without the q^{s/24} prefactor is euler_product^s; this applies
/// the prefactor on the smallest allowed grid.  s must be even.
QZSeries eta_pow(int s, const Rational& order);

/// Discriminant cusp form q prod (1 - q^n)^24.
QZSeries delta(const Rational& order);

/// Square of the odd theta function.  The half-integral zeta-exponents of
/// the theta function itself cancel in the square, which is a genuine
/// QZSeries on q-grid 4 with leading term -q^{1/4} (zeta - 2 + 1/zeta).
/// The unsquared function is never exposed.
QZSeries theta1_sq(const Rational& order);

/// Regular part plus optional singular part of a form with a zeta-pole.
struct FormWithSingular {
  QZSeries regular;
  std::optional<SingularFactor> singular;
};

/// Deformed Eisenstein series J_n, n >= 1: regular part
/// B_n - n sum_{k,r >= 1} r^{n-1} (zeta^k + (-1)^n zeta^{-k}) q^{kr},
/// plus for n = 1 the singular part zeta/(zeta - 1) = -zeta/(1 - zeta).
FormWithSingular jn_deformed(int n, const Rational& order);

/// Fourier-normalized Weierstrass function: regular part
/// 1/12 + sum_{n >= 1} sum_{d | n} d (zeta^d - 2 + zeta^{-d}) q^n and
/// singular part zeta/(1 - zeta)^2.
FormWithSingular weierstrass_p(const Rational& order);

/// Weak Jacobi form of weight -2, index 1: -theta1_sq / eta^6.
QZSeries phi_m2_1(const Rational& order);

/// Weak Jacobi form of weight 0, index 1: 12 (wp * phi_m2_1), the
/// singular parts cancelling exactly.
QZSeries phi_0_1(const Rational& order);

/// Jacobi-Eisenstein series of index 1, weight k in {4, 6}, normalized so
/// the q^0 level is exactly 1.
QZSeries jacobi_eisenstein_index1(int k, const Rational& order);

/// Quasi-Jacobi form of weight 2, index 1: phi_m2_1 (E2 wp - E4 / 12).
QZSeries e2_1(const Rational& order);

/// Jacobi cusp form of weight 10, index 1: (E6 E4_1 - E4 E6_1) / 144.
QZSeries phi_10_1(const Rational& order);

/// Jacobi cusp form of weight 12, index 1: (E4^2 E4_1 - E6 E6_1) / 144.
QZSeries phi_12_1(const Rational& order);

// --- catalog --------------------------------------------------------------

enum class FormKind {
  modular,       // level-one modular form
  quasi,         // quasi-modular / quasi-Jacobi
  weak_jacobi,   // weak Jacobi form
  jacobi,        // holomorphic Jacobi form
  jacobi_cusp,   // Jacobi cusp form
  kernel,        // regular part of a form with separate singular data
};

struct FormCatalogEntry {
  std::string name;
  int weight;
  int index;
  FormKind kind;
  std::function<QZSeries(const Rational&)> build;
};

/// All named forms reachable from the command line, in a fixed order.
const std::vector<FormCatalogEntry>& catalog();

/// nullptr when the name is unknown.
const FormCatalogEntry* find_form(std::string_view name);

/// Catalog build with a process-wide memo cache keyed by (name, order);
/// safe for concurrent readers.
QZSeries build_form(const std::string& name, const Rational& order);

// --- consistency check against the classical z-power expansion ------------

/// Result of comparing the Fourier realization of the Weierstrass function
/// against its classical Laurent expansion in w = 2 pi i z, whose even
/// coefficients are rational multiples of Eisenstein series.  All pi powers
/// cancel, so the comparison is exact rational arithmetic.
struct WpCrossCheckReport {
  bool ok = true;
  int first_bad_power = -1;          // w-power of the first mismatch
  long first_bad_level = -1;         // scaled q-level of the first mismatch
  std::string detail;
};

WpCrossCheckReport cross_check_wp_z_expansion(int z_order, int q_order);

}  // namespace jf::forms
