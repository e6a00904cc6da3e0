#pragma once

/**
 * Exact bases for spaces of weak, holomorphic, and cusp Jacobi forms of
 * even weight and integer index, generated as monomials
 *
 *     E4^a E6^b Delta^c phi_{-2,1}^i phi_{0,1}^j,  i + j = index,
 *
 * de-duplicated to a basis by exact rank computation, together with exact
 * membership solves against such bases.
 */

#include "jf/forms.hpp"
#include "jf/linalg.hpp"
#include "jf/qzseries.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace jf::spaces {

/// dim M_k(SL_2(Z)); zero for negative or odd k.
long dim_modular(int k);

/// dim S_k(SL_2(Z)).
long dim_cusp_modular(int k);

/// Index-1 dimensions via the M_k + S_{k+2} / S_k + S_{k+2} splitting.
long dim_jacobi_hol_index1(int k);
long dim_jacobi_cusp_index1(int k);

enum class Flavor { weak, holomorphic, cusp };

struct BasisMonomial {
  int e4 = 0;      // power of E4
  int e6 = 0;      // power of E6
  int delta = 0;   // power of Delta
  int phi_m2 = 0;  // power of phi_{-2,1}
  int phi_0 = 0;   // power of phi_{0,1}
  std::string name() const;
};

struct SpaceBasis {
  int weight = 0;
  int index = 0;
  Flavor flavor = Flavor::weak;
  Rational order;
  std::vector<std::string> names;    // one per element
  std::vector<QZSeries> elements;    // linearly independent at `order`
};

/// Spanning monomials for weight k, index m, before rank reduction, in a
/// fixed deterministic order.
std::vector<BasisMonomial> weak_monomials(int k, int m);

/// Weak basis: monomial spanning set reduced to a basis by exact rank.
/// Throws InsufficientOrderError when the rank at `order` falls short of
/// the structure-theorem dimension sum_i dim M_{k+2i}.
SpaceBasis weak_basis(int k, int m, const Rational& order);

/// Cuts a basis down by the holomorphic (4nm - r^2 >= 0) or cusp (> 0)
/// support condition, via exact nullspace of the violating-coefficient
/// block.  Elements are normalized to leading coefficient 1.
SpaceBasis subspace(const SpaceBasis& basis, Flavor flavor);

struct Membership {
  bool in_span = false;
  std::vector<Rational> coefficients;                  // valid when in_span
  std::optional<std::pair<Rational, long>> witness;    // first bad (n, r)
};

/// Solves f = sum_i x_i basis_i on a square leading block chosen from the
/// lowest coefficient positions, then verifies every stored coefficient
/// with q-exponent < order.  A residual anywhere reports the first
/// offending position instead of a coefficient vector.
Membership membership_solve(const QZSeries& f, const std::vector<QZSeries>& basis,
                            const Rational& order);

}  // namespace jf::spaces
