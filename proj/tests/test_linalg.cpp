#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "jf/linalg.hpp"

#include <random>

using jf::Rational;
using jf::linalg::Matrix;
using jf::linalg::Vector;

namespace {

Rational q(long num, long den = 1) { return jf::make_rational(num, den); }

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<long> pick(-5, 5);
  Matrix a(rows, Vector(cols));
  for (auto& row : a)
    for (auto& x : row) x = Rational(pick(rng));
  return a;
}

bool is_zero_vector(const Vector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("rref reduces a known matrix") {
  Matrix a{{q(1), q(2), q(3)}, {q(2), q(4), q(7)}, {q(1), q(2), q(4)}};
  auto pivots = jf::linalg::rref(a);
  REQUIRE(pivots.size() == 2);
  CHECK(pivots[0] == 0);
  CHECK(pivots[1] == 2);
  CHECK(a[0] == Vector{q(1), q(2), q(0)});
  CHECK(a[1] == Vector{q(0), q(0), q(1)});
  CHECK(is_zero_vector(a[2]));
}

TEST_CASE("rank of known matrices") {
  CHECK(jf::linalg::rank({{q(1), q(0)}, {q(0), q(1)}}) == 2);
  CHECK(jf::linalg::rank({{q(1), q(2)}, {q(2), q(4)}}) == 1);
  CHECK(jf::linalg::rank({{q(0), q(0)}, {q(0), q(0)}}) == 0);
  CHECK(jf::linalg::rank({{q(1, 2), q(1, 3), q(1)}, {q(1), q(2, 3), q(2)}}) == 1);
}

TEST_CASE("nullspace vectors satisfy a x = 0") {
  Matrix a{{q(1), q(2), q(3)}, {q(4), q(5), q(6)}};
  auto basis = jf::linalg::nullspace(a);
  REQUIRE(basis.size() == 1);
  CHECK(is_zero_vector(jf::linalg::apply(a, basis[0])));
  CHECK(basis[0][2] == q(1));
}

TEST_CASE("solve consistent and inconsistent systems") {
  Matrix a{{q(2), q(1)}, {q(1), q(3)}};
  auto x = jf::linalg::solve(a, {q(5), q(10)});
  REQUIRE(x.has_value());
  CHECK(jf::linalg::apply(a, *x) == Vector{q(5), q(10)});
  CHECK((*x)[0] == q(1));
  CHECK((*x)[1] == q(3));

  Matrix singular{{q(1), q(1)}, {q(2), q(2)}};
  CHECK_FALSE(jf::linalg::solve(singular, {q(1), q(3)}).has_value());
  CHECK(jf::linalg::solve(singular, {q(1), q(2)}).has_value());
}

TEST_CASE("randomized solve and nullspace dimensions") {
  std::mt19937_64 rng(0x11a9);
  std::uniform_int_distribution<long> pick(-5, 5);
  for (int i = 0; i < 200; ++i) {
    std::size_t rows = 2 + static_cast<std::size_t>(i % 4);
    std::size_t cols = 2 + static_cast<std::size_t>((i / 4) % 4);
    Matrix a = random_matrix(rng, rows, cols);

    Vector x(cols);
    for (auto& v : x) v = Rational(pick(rng));
    Vector b = jf::linalg::apply(a, x);

    auto solved = jf::linalg::solve(a, b);
    REQUIRE(solved.has_value());
    CHECK(jf::linalg::apply(a, *solved) == b);

    auto kernel = jf::linalg::nullspace(a);
    CHECK(kernel.size() == cols - jf::linalg::rank(a));
    for (const auto& v : kernel) CHECK(is_zero_vector(jf::linalg::apply(a, v)));
  }
}
