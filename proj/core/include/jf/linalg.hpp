#pragma once

// Dense exact rational linear algebra, sized for coefficient matrices of
// truncated series (hundreds of rows, tens of columns).

#include "jf/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace jf::linalg {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;  // row-major; all rows equal length

/// In-place Gauss-Jordan reduction to reduced row echelon form.
/// Returns the pivot column of each pivot row, in ascending order.
std::vector<std::size_t> rref(Matrix& a);

std::size_t rank(Matrix a);

/// Basis of the right kernel {x : a x = 0}, one vector per free column,
/// in ascending free-column order.  Each vector has a 1 in its free slot.
std::vector<Vector> nullspace(Matrix a);

/// Exact solve of a x = b with free variables pinned to zero.
/// Returns nullopt when the system is inconsistent.
std::optional<Vector> solve(Matrix a, Vector b);

/// Matrix-vector product; x.size() must equal the row width.
Vector apply(const Matrix& a, const Vector& x);

}  // namespace jf::linalg
