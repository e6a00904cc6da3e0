#pragma once

/**
 * Sparse truncated Laurent expansions in two variables q, zeta with exact
 * rational coefficients.
 *
 * A QZSeries stores finitely many terms c(n, r) q^n zeta^r where the
 * q-exponents n live on a fractional grid n = nScaled / gridDenom with
 * gridDenom in {1, 2, 4, 8, 24}, and the zeta-exponents r are integers.
 *
 * Truncation semantics: a series carries an optional order N.  Every
 * coefficient with q-exponent strictly below N is exact (zeros included by
 * omission); nothing is known at or above N.  A missing order means the
 * series is an exact finite polynomial, valid to every order.  Each
 * operation assigns the tightest order that is still exact for its result.
 *
 * Canonical form: no zero coefficients and no empty q-levels are ever
 * stored, and no stored exponent reaches the order bound.
 */

#include "jf/rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>

namespace jf {

inline constexpr std::array<int, 5> kAllowedGrids{1, 2, 4, 8, 24};
bool grid_allowed(int grid_denom);

class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Disallowed grid denominator, incompatible grids, or an exponent that
/// does not lie on the requested grid.
class GridError : public SeriesError {
 public:
  using SeriesError::SeriesError;
};

/// A q-level failed exact division by (1 - zeta)^e.
class NonDivisibleError : public SeriesError {
 public:
  NonDivisibleError(Rational q_exponent, Rational remainder);
  Rational q_exponent;  // level at which division failed
  Rational remainder;   // value of the level polynomial at zeta = 1
};

/// An operation needed coefficients at or beyond the stored order.
class InsufficientOrderError : public SeriesError {
 public:
  using SeriesError::SeriesError;
};

/// One q-level: a Laurent polynomial in zeta (exponent -> coefficient).
using ZetaPoly = std::map<long, Rational>;

/// numer(zeta) / (1 - zeta)^pole_order, kept separate from regular series
/// data so that meromorphic kernels never enter a QZSeries directly.
struct SingularFactor {
  ZetaPoly numer;
  int pole_order = 0;
};

/// True if the factor is reduced: pole_order >= 0 and numer(1) != 0
/// (an empty numerator is allowed and represents zero).
bool singular_factor_valid(const SingularFactor& s);

class QZSeries {
 public:
  /// Exact zero polynomial on the integer grid, valid to every order.
  QZSeries() = default;

  /// Exact zero with the given grid and order bound.
  static QZSeries zero(int grid_denom, std::optional<Rational> order = std::nullopt);

  /// Exact constant c q^0 zeta^0.
  static QZSeries constant(const Rational& c);

  /// q^n zeta^r with n on the given grid; exact at every order.
  static QZSeries monomial(const Rational& n, long r, int grid_denom);

  /// Exact q^0-level Laurent polynomial in zeta.
  static QZSeries from_zeta_poly(const ZetaPoly& p);

  /// Validating constructor used by the form builders: takes scaled-exponent
  /// levels, purges zeros, and drops anything at or beyond `order`.
  static QZSeries assemble(int grid_denom, std::optional<Rational> order,
                           std::map<long, ZetaPoly> levels);

  int grid_denom() const { return grid_; }
  const std::optional<Rational>& order() const { return order_; }
  const std::map<long, ZetaPoly>& levels() const { return levels_; }

  std::optional<int> weight() const { return weight_; }
  std::optional<int> index() const { return index_; }
  void set_weight(std::optional<int> w) { weight_ = w; }
  void set_index(std::optional<int> m) { index_ = m; }

  bool is_zero() const { return levels_.empty(); }
  std::size_t term_count() const;

  /// Most negative stored q-exponent; 0 for an empty series.
  Rational q_min() const;

  /// Stored coefficient of q^n zeta^r (zero if absent).  Throws
  /// InsufficientOrderError when n is at or beyond the order bound.
  Rational coeff(const Rational& n, long r) const;

  /// True q-exponent of a scaled level key.
  Rational q_exponent(long n_scaled) const { return make_rational(n_scaled, grid_); }

 private:
  int grid_ = 1;
  std::optional<Rational> order_;
  std::optional<int> weight_;
  std::optional<int> index_;
  std::map<long, ZetaPoly> levels_;

  void purge();

  friend QZSeries add(const QZSeries&, const QZSeries&);
  friend QZSeries scale(const Rational&, const QZSeries&);
  friend QZSeries mul(const QZSeries&, const QZSeries&);
  friend QZSeries d_tau(const QZSeries&);
  friend QZSeries d_z(const QZSeries&);
  friend QZSeries heat(int, const QZSeries&);
  friend QZSeries restrict_z0(const QZSeries&);
  friend QZSeries div_by_one_minus_zeta_pow(const QZSeries&, int);
  friend QZSeries inverse(const QZSeries&, const std::optional<Rational>&);
  friend QZSeries truncated(const QZSeries&, const Rational&);
  friend QZSeries rescaled(const QZSeries&, int);
  friend QZSeries canonical_grid(const QZSeries&);
};

// --- arithmetic ---------------------------------------------------------

QZSeries add(const QZSeries& a, const QZSeries& b);
QZSeries sub(const QZSeries& a, const QZSeries& b);
QZSeries neg(const QZSeries& a);
QZSeries scale(const Rational& c, const QZSeries& a);
QZSeries mul(const QZSeries& a, const QZSeries& b);

/// a^e with e >= 0 by binary powering (truncation handled by mul).
QZSeries pow(const QZSeries& a, unsigned e);

inline QZSeries operator+(const QZSeries& a, const QZSeries& b) { return add(a, b); }
inline QZSeries operator-(const QZSeries& a, const QZSeries& b) { return sub(a, b); }
inline QZSeries operator*(const QZSeries& a, const QZSeries& b) { return mul(a, b); }
inline QZSeries operator-(const QZSeries& a) { return neg(a); }
inline QZSeries operator*(const Rational& c, const QZSeries& a) { return scale(c, a); }

// --- differential and structural operations -----------------------------

/// (2 pi i)^{-1} d/dtau: multiplies c(n, r) by n.  Clears the weight tag.
QZSeries d_tau(const QZSeries& a);

/// (2 pi i)^{-1} d/dz: multiplies c(n, r) by r.  Clears the weight tag.
QZSeries d_z(const QZSeries& a);

/// Index-m heat operator: multiplies c(n, r) by (4 n m - r^2).
QZSeries heat(int m, const QZSeries& a);

/// Specialization zeta -> 1 (z = 0): collapses each q-level to its
/// coefficient sum.  Keeps the weight tag, sets index 0.
QZSeries restrict_z0(const QZSeries& a);

/// Exact division of every q-level by (1 - zeta)^e.  Throws
/// NonDivisibleError (with the offending level and remainder) if any level
/// fails; partial results are never returned.
QZSeries div_by_one_minus_zeta_pow(const QZSeries& a, int e);

/// a * numer / (1 - zeta)^e, exact.  The singular factor must be reduced.
QZSeries mul_singular(const QZSeries& a, const SingularFactor& s);

/// Multiplicative inverse.  Requires the lowest stored q-level to be a
/// single monomial.  For a series of finite order N the result has order
/// N - 2*qmin; an exact polynomial input needs `order` to bound the
/// (generally infinite) output.
QZSeries inverse(const QZSeries& a, const std::optional<Rational>& order = std::nullopt);

/// Restriction to coefficients strictly below `order` (must not exceed the
/// stored order).
QZSeries truncated(const QZSeries& a, const Rational& order);

/// Re-expresses the series on a finer allowed grid (a multiple of the
/// current one).
QZSeries rescaled(const QZSeries& a, int new_grid_denom);

/// Smallest allowed grid that still carries every stored exponent.
QZSeries canonical_grid(const QZSeries& a);

// --- predicates ----------------------------------------------------------

/// Compare all coefficients with q-exponent < n_order; both operands must
/// be exact that far.
bool eq_to_order(const QZSeries& a, const QZSeries& b, const Rational& n_order);

/// c(n, r) == c(n, -r) for every stored term.
bool symmetry_check(const QZSeries& a);

/// No stored term with 4 n m - r^2 < 0 (Fourier support of a holomorphic
/// Jacobi form of index m).
bool holomorphic_validate(const QZSeries& a, int m);

/// No stored term with 4 n m - r^2 <= 0 (cusp form support).
bool cusp_validate(const QZSeries& a, int m);

}  // namespace jf
