#pragma once

// Randomized property suites shared by the unit tests and the acceptance
// runner.  Each suite runs a fixed number of cases from a fixed seed and
// reports how many failed, plus a description of the first failure.

#include "jf/forms.hpp"
#include "jf/qzseries.hpp"

#include "random_series.hpp"

#include <random>
#include <sstream>
#include <string>

namespace jftest {

struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    ++failures;
    if (first_failure.empty()) first_failure = what;
  }
};

inline Rational min_order(const QZSeries& a, const QZSeries& b) {
  const Rational& oa = *a.order();
  const Rational& ob = *b.order();
  return oa < ob ? oa : ob;
}

/// Commutativity, associativity, and distributivity of mul over add.
inline SuiteResult ring_axiom_suite(std::uint64_t seed, int cases) {
  SuiteResult res{"ring axioms"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_grid(0, 2);
  const int grids[3] = {1, 2, 4};
  std::uniform_int_distribution<long> pick_order(3, 8);

  for (int i = 0; i < cases; ++i) {
    int grid = grids[pick_grid(rng)];
    long order = pick_order(rng);
    QZSeries a = random_series(rng, grid, 5, order);
    QZSeries b = random_series(rng, grid, 5, order);
    QZSeries c = random_series(rng, grid, 5, order);

    QZSeries ab = mul(a, b);
    QZSeries ba = mul(b, a);
    QZSeries ab_c = mul(ab, c);
    QZSeries a_bc = mul(a, mul(b, c));
    QZSeries left = mul(a, add(b, c));
    QZSeries right = add(mul(a, b), mul(a, c));

    bool ok = eq_to_order(ab, ba, min_order(ab, ba)) &&
              eq_to_order(ab_c, a_bc, min_order(ab_c, a_bc)) &&
              eq_to_order(left, right, min_order(left, right));
    std::ostringstream what;
    what << "case " << i << " (grid " << grid << ", order " << order << ")";
    res.record(ok, what.str());
  }
  return res;
}

/// Product rule for both normalized partial derivatives.
inline SuiteResult leibniz_suite(std::uint64_t seed, int cases) {
  SuiteResult res{"Leibniz rules"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_grid(0, 2);
  const int grids[3] = {1, 2, 4};
  std::uniform_int_distribution<long> pick_order(3, 8);

  for (int i = 0; i < cases; ++i) {
    int grid = grids[pick_grid(rng)];
    long order = pick_order(rng);
    QZSeries a = random_series(rng, grid, 5, order);
    QZSeries b = random_series(rng, grid, 5, order);

    QZSeries prod = mul(a, b);
    QZSeries tau_lhs = d_tau(prod);
    QZSeries tau_rhs = add(mul(d_tau(a), b), mul(a, d_tau(b)));
    QZSeries z_lhs = d_z(prod);
    QZSeries z_rhs = add(mul(d_z(a), b), mul(a, d_z(b)));

    bool ok = eq_to_order(tau_lhs, tau_rhs, min_order(tau_lhs, tau_rhs)) &&
              eq_to_order(z_lhs, z_rhs, min_order(z_lhs, z_rhs));
    std::ostringstream what;
    what << "case " << i << " (grid " << grid << ", order " << order << ")";
    res.record(ok, what.str());
  }
  return res;
}

/// heat(m, q^n zeta^r) multiplies the coefficient by 4nm - r^2, checked
/// exhaustively over the support of random series.
inline SuiteResult heat_monomial_suite(std::uint64_t seed, int cases) {
  SuiteResult res{"heat monomial action"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_grid(0, 2);
  const int grids[3] = {1, 2, 4};
  std::uniform_int_distribution<int> pick_m(0, 3);

  for (int i = 0; i < cases; ++i) {
    int grid = grids[pick_grid(rng)];
    int m = pick_m(rng);
    QZSeries s = random_series(rng, grid, 8, 8);
    QZSeries h = heat(m, s);

    bool ok = true;
    for (const auto& [n_scaled, poly] : s.levels()) {
      Rational n = s.q_exponent(n_scaled);
      for (const auto& [r, cv] : poly) {
        Rational factor = Rational(4 * m) * n - Rational(r * r);
        if (h.coeff(n, r) != factor * cv) ok = false;
      }
    }
    std::ostringstream what;
    what << "case " << i << " (grid " << grid << ", m " << m << ")";
    res.record(ok, what.str());
  }
  return res;
}

/// Multiplying by (1 - zeta)^e and dividing back is the identity, and the
/// quotient re-multiplied reproduces the product.
inline SuiteResult division_roundtrip_suite(std::uint64_t seed, int cases) {
  SuiteResult res{"division round-trip"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_grid(0, 2);
  const int grids[3] = {1, 2, 4};
  std::uniform_int_distribution<int> pick_e(1, 3);

  QZSeries one_minus_zeta = QZSeries::from_zeta_poly({{0, Rational(1)}, {1, Rational(-1)}});

  for (int i = 0; i < cases; ++i) {
    int grid = grids[pick_grid(rng)];
    int e = pick_e(rng);
    QZSeries t = random_series(rng, grid, 6, 8);
    QZSeries s = mul(pow(one_minus_zeta, static_cast<unsigned>(e)), t);
    QZSeries q = div_by_one_minus_zeta_pow(s, e);
    QZSeries back = mul(pow(one_minus_zeta, static_cast<unsigned>(e)), q);

    bool ok = eq_to_order(q, t, min_order(q, t)) &&
              eq_to_order(back, s, min_order(back, s));
    std::ostringstream what;
    what << "case " << i << " (grid " << grid << ", e " << e << ")";
    res.record(ok, what.str());
  }
  return res;
}

/// Rebuilding any catalog entry at a larger order extends, never changes,
/// previously computed coefficients.
inline SuiteResult rebuild_stability_suite() {
  SuiteResult res{"rebuild stability"};
  const long pairs[5][2] = {{3, 7}, {5, 10}, {7, 12}, {10, 15}, {12, 20}};

  for (const auto& entry : jf::forms::catalog()) {
    for (const auto& pair : pairs) {
      QZSeries small = jf::forms::build_form(entry.name, Rational(pair[0]));
      QZSeries large = jf::forms::build_form(entry.name, Rational(pair[1]));
      bool ok = eq_to_order(small, large, Rational(pair[0]));
      std::ostringstream what;
      what << entry.name << " at orders " << pair[0] << " vs " << pair[1];
      res.record(ok, what.str());
    }
  }
  return res;
}

}  // namespace jftest
