#include "jf/linalg.hpp"

#include <stdexcept>

namespace jf::linalg {

namespace {

std::size_t width_of(const Matrix& a) {
  if (a.empty()) return 0;
  std::size_t w = a.front().size();
  for (const auto& row : a)
    if (row.size() != w) throw std::invalid_argument("ragged matrix");
  return w;
}

}  // namespace

std::vector<std::size_t> rref(Matrix& a) {
  const std::size_t ncols = width_of(a);
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][col] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[row], a[sel]);
    Rational inv = Rational(1) / a[row][col];
    for (std::size_t j = col; j < ncols; ++j) a[row][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (std::size_t j = col; j < ncols; ++j) a[i][j] -= f * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(Matrix a) { return rref(a).size(); }

std::vector<Vector> nullspace(Matrix a) {
  const std::size_t ncols = width_of(a);
  std::vector<std::size_t> pivots = rref(a);
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(ncols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(Matrix a, Vector b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve: size mismatch");
  const std::size_t ncols = width_of(a);
  for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(std::move(b[i]));
  std::vector<std::size_t> pivots = rref(a);
  if (!pivots.empty() && pivots.back() == ncols) return std::nullopt;
  Vector x(ncols, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][ncols];
  return x;
}

Vector apply(const Matrix& a, const Vector& x) {
  const std::size_t ncols = width_of(a);
  if (x.size() != ncols) throw std::invalid_argument("apply: size mismatch");
  Vector y(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < ncols; ++j)
      if (a[i][j] != 0 && x[j] != 0) y[i] += a[i][j] * x[j];
  return y;
}

}  // namespace jf::linalg
