#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jf/qzseries.hpp"
#include "jf/real.hpp"

namespace jf::num {

// Numerical evaluation of the Fourier coefficients of the Petersson
// adjoints of the three weight-raising operators (heat-shift, Oberdieck,
// Jacobi-Serre).  Inputs are exact cusp expansions; outputs are
// high-precision values of the closed coefficient formulas: a diagonal
// term plus divisor-weighted sums over the input coefficients, with
// hypergeometric corrections in the Oberdieck case.

/// Snapshot of a cusp expansion's coefficients for random access by the
/// adjoint sums.  Requires an integer exponent grid and a finite order.
class CoefficientSource {
 public:
  explicit CoefficientSource(const QZSeries& f);

  /// c(n, r), zero when absent.  Throws InsufficientOrderError when n is
  /// at or beyond the expansion order.
  Rational coeff(long n, long r) const;

  /// Exact-coefficient threshold: c(n, r) is available for n < order.
  const Rational& order() const { return order_; }

  /// Empirical growth constant: 4 times the maximum over the stored
  /// support of |c(n,r)| / (4nm - r^2)^((k+1)/2).  Feeds the tail bounds.
  Real growth_constant(long k, long m, mpfr_prec_t prec) const;

 private:
  std::map<std::pair<long, long>, Rational> coeffs_;
  Rational order_;
};

enum class AdjointOperator { heat_shift, oberdieck, jacobi_serre };

/// Short table label: "L", "O" or "J".
const char* operator_name(AdjointOperator op);

/// Normalizing constant m^2 (k-1/2)(k-3/2) (4lm-w^2)^(k-3/2) / pi^2.
/// Requires 4lm - w^2 > 0.
Real beta_const(long k, long m, long l, long w,
                mpfr_prec_t prec = Real::default_precision());

/// One evaluated coefficient of an adjoint image at (l, w).  `terms` is
/// the additive breakdown, already carrying the beta prefactor (for the
/// heat-shift and Oberdieck evaluators the terms sum to `value`; the
/// Jacobi-Serre value is assembled from the other two evaluators' totals
/// instead).  `tail_bound` majorizes the change
/// under any increase of pmax; it is infinite where the printed divisor
/// sums admit no decaying majorant (the A4/A5 families of the Oberdieck
/// adjoint) or where k <= 4 leaves the comparison integral divergent.
struct AdjointEntry {
  long l = 0;
  long w = 0;
  Real value;
  std::map<std::string, Real> terms;
  Real tail_bound;
};

/// Heat-shift adjoint coefficient:
///   beta * [ ((4lm-w^2) - m(2k-1)/6) c(l,w) / (4lm-w^2)^(k+1/2)
///            + 4m(2k-1) sum_{p=1}^{pmax} sigma_1(p) c(l+p,w) / (4(l+p)m-w^2)^(k+1/2) ]
/// Terms: A1 = diagonal piece, A2 = divisor sum.
AdjointEntry adjoint_l_coeff(const CoefficientSource& src, long k, long m,
                             long l, long w, long pmax,
                             mpfr_prec_t prec = Real::default_precision());

/// Oberdieck adjoint coefficient beta * (A1 + A2 + A31 + A32 + A4 + A5):
///   A1  = (l - k/12 + w/2 + m/6) c(l,w) / (4lm-w^2)^(k+1/2)
///   A2  = 2k sum_{p>=1} sigma_1(p) c(l+p,w) / (4(l+p)m-w^2)^(k+1/2)
///   A31 = (w/2) sum_{p>=0} c(l,u)/(4lm-u^2)^(k+1/2) *
///         [1 - (2 Gamma(k+1)/(sqrt(pi) Gamma(k+1/2))) u (4lm-u^2)^(-1/2)
///              2F1(1/2,k+1;3/2; -u^2/(4lm-u^2))]          at u = w+p+1
///   A32 = -(w/2) sum_{p>=0} (same bracket)                 at u = p-w
///   A4  = w sum_{p>=1} sum_{d|p} (c(l+p,w+d)/D+^(k+1/2) - c(l+p,w-d)/D-^(k+1/2))
///   A5  = -2m sum_{p>=1} sum_{d|p} (p/d)(c(l+p,w+d)/D+^(k+1/2) + c(l+p,w-d)/D-^(k+1/2))
/// with D+- = 4(l+p)m - (w+-d)^2.  A31/A32 run over 4lm - u^2 > 0 only;
/// A4/A5 summands with a nonpositive discriminant are skipped.  A31, A32
/// and A4 vanish identically at w = 0.
AdjointEntry adjoint_o_terms(const CoefficientSource& src, long k, long m,
                             long l, long w, long pmax,
                             mpfr_prec_t prec = Real::default_precision());

/// Jacobi-Serre adjoint coefficient, assembled from the two evaluators
/// above over the same coefficient source:
///   value = (L.value - O.value) / (4m - 1).
AdjointEntry adjoint_j_coeff(const CoefficientSource& src, long k, long m,
                             long l, long w, long pmax,
                             mpfr_prec_t prec = Real::default_precision());

struct AdjointTable {
  AdjointOperator op = AdjointOperator::heat_shift;
  long k = 0;
  long m = 0;
  long pmax = 0;
  mpfr_prec_t precision_bits = 0;
  std::vector<AdjointEntry> entries;
};

/// Evaluate one operator over the grid l in [1, lmax], w in [0, wmax],
/// keeping points with 4lm - w^2 > 0.  Entries are evaluated in a fixed
/// order, single-threaded, so identical inputs give identical tables.
AdjointTable build_table(const CoefficientSource& src, AdjointOperator op,
                         long k, long m, long lmax, long wmax, long pmax,
                         mpfr_prec_t prec = Real::default_precision());

struct RatioReport {
  Real ratio;              // median of entry.value / c_ref(l, w)
  Real max_rel_deviation;  // max |ratio_i - ratio| / |ratio|
};

/// Test whether a table is a constant multiple of a reference expansion's
/// coefficients.  Throws std::domain_error if the reference vanishes at a
/// grid point of the table.
RatioReport ratio_constancy(const AdjointTable& table,
                            const CoefficientSource& reference);

}  // namespace jf::num
