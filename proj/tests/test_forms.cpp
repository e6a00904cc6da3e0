#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "jf/forms.hpp"

#include "property_suites.hpp"

#include <map>

using jf::QZSeries;
using jf::Rational;
using namespace jf::forms;

namespace {

Rational q(long num, long den = 1) { return jf::make_rational(num, den); }

}  // namespace

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == q(-1, 2));
  CHECK(bernoulli(2) == q(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(4) == q(-1, 30));
  CHECK(bernoulli(6) == q(1, 42));
  CHECK(bernoulli(8) == q(-1, 30));
  CHECK(bernoulli(12) == q(-691, 2730));
}

TEST_CASE("divisor sums") {
  CHECK(sigma(1, 6) == 12);
  CHECK(sigma(1, 1) == 1);
  CHECK(sigma(3, 4) == 73);
  CHECK(sigma(0, 12) == 6);
  auto table = sigma1_table(10);
  for (unsigned long n = 1; n <= 10; ++n) CHECK(table[n] == sigma(1, n));
}

TEST_CASE("Eisenstein expansions") {
  QZSeries e2 = eisenstein(2, Rational(4));
  CHECK(e2.coeff(Rational(0), 0) == 1);
  CHECK(e2.coeff(Rational(1), 0) == -24);
  CHECK(e2.coeff(Rational(2), 0) == -72);
  CHECK(e2.coeff(Rational(3), 0) == -96);
  CHECK(e2.weight() == 2);
  CHECK(e2.index() == 0);

  CHECK(eisenstein(4, Rational(2)).coeff(Rational(1), 0) == 240);
  CHECK(eisenstein(6, Rational(2)).coeff(Rational(1), 0) == -504);
  CHECK(eisenstein(8, Rational(2)).coeff(Rational(1), 0) == 480);
}

TEST_CASE("discriminant cusp form") {
  QZSeries d = delta(Rational(5));
  CHECK(d.coeff(Rational(1), 0) == 1);
  CHECK(d.coeff(Rational(2), 0) == -24);
  CHECK(d.coeff(Rational(3), 0) == 252);
  CHECK(d.coeff(Rational(4), 0) == -1472);
  CHECK(d.coeff(Rational(0), 0) == 0);
}

TEST_CASE("E4^3 - E6^2 = 1728 Delta") {
  Rational order(20);
  QZSeries lhs = sub(pow(eisenstein(4, order), 3), pow(eisenstein(6, order), 2));
  QZSeries rhs = scale(Rational(1728), delta(order));
  CHECK(eq_to_order(lhs, rhs, order));
}

TEST_CASE("eta powers and the theta square") {
  QZSeries e6 = eta_pow(6, Rational(2));
  CHECK(e6.coeff(q(1, 4), 0) == 1);
  CHECK(e6.grid_denom() == 4);

  QZSeries t = theta1_sq(Rational(2));
  CHECK(t.grid_denom() == 4);
  CHECK(t.coeff(q(1, 4), 1) == -1);
  CHECK(t.coeff(q(1, 4), 0) == 2);
  CHECK(t.coeff(q(1, 4), -1) == -1);
  CHECK(t.q_min() == q(1, 4));

  QZSeries e24 = eta_pow(24, Rational(6));
  CHECK(eq_to_order(e24, delta(Rational(6)), Rational(6)));
}

TEST_CASE("deformed Eisenstein series") {
  FormWithSingular j1 = jn_deformed(1, Rational(10));
  REQUIRE(j1.singular.has_value());
  CHECK(j1.singular->pole_order == 1);

  FormWithSingular j2 = jn_deformed(2, Rational(10));
  CHECK_FALSE(j2.singular.has_value());
  CHECK(j2.regular.coeff(Rational(0), 0) == q(1, 6));
  CHECK(j2.regular.coeff(Rational(1), 1) == -2);
  CHECK(j2.regular.coeff(Rational(1), -1) == -2);
  CHECK(j2.regular.coeff(Rational(1), 0) == 0);
}

TEST_CASE("deformed Eisenstein series restrict to Bernoulli multiples of E_n") {
  Rational order(10);
  for (int n = 2; n <= 8; n += 2) {
    QZSeries restricted = restrict_z0(jn_deformed(n, order).regular);
    QZSeries want = scale(bernoulli(static_cast<unsigned>(n)),
                          eisenstein(n, order));
    CHECK_MESSAGE(eq_to_order(restricted, want, order), "J_" << n);
  }
  for (int n = 3; n <= 7; n += 2) {
    CHECK_MESSAGE(restrict_z0(jn_deformed(n, order).regular).is_zero(),
                  "J_" << n);
  }
}

TEST_CASE("Weierstrass function in its Fourier normalization") {
  FormWithSingular wp = weierstrass_p(Rational(6));
  CHECK(wp.regular.coeff(Rational(0), 0) == q(1, 12));
  CHECK(wp.regular.coeff(Rational(1), 1) == 1);
  CHECK(wp.regular.coeff(Rational(1), 0) == -2);
  CHECK(wp.regular.coeff(Rational(1), -1) == 1);
  REQUIRE(wp.singular.has_value());
  CHECK(wp.singular->pole_order == 2);
}

TEST_CASE("Fourier realization matches the classical z-expansion") {
  WpCrossCheckReport rep = cross_check_wp_z_expansion(6, 10);
  CHECK_MESSAGE(rep.ok, rep.detail);
}

TEST_CASE("weak Jacobi generators have the stated leading levels") {
  QZSeries pm2 = phi_m2_1(Rational(8));
  CHECK(pm2.coeff(Rational(0), 1) == 1);
  CHECK(pm2.coeff(Rational(0), 0) == -2);
  CHECK(pm2.coeff(Rational(0), -1) == 1);
  CHECK(pm2.weight() == -2);
  CHECK(pm2.index() == 1);
  CHECK(restrict_z0(pm2).is_zero());

  QZSeries p0 = phi_0_1(Rational(8));
  CHECK(p0.coeff(Rational(0), 1) == 1);
  CHECK(p0.coeff(Rational(0), 0) == 10);
  CHECK(p0.coeff(Rational(0), -1) == 1);
  CHECK(p0.weight() == 0);
  CHECK(p0.index() == 1);
}

TEST_CASE("index-1 Jacobi Eisenstein series") {
  for (int k : {4, 6}) {
    QZSeries e = jacobi_eisenstein_index1(k, Rational(10));
    CHECK(e.coeff(Rational(0), 0) == 1);
    CHECK(e.coeff(Rational(0), 1) == 0);
    CHECK(e.coeff(Rational(0), -1) == 0);
    CHECK(e.weight() == k);
    QZSeries want = eisenstein(k, Rational(10));
    CHECK(eq_to_order(restrict_z0(e), want, Rational(10)));
    CHECK(jf::holomorphic_validate(e, 1));
    CHECK_FALSE(jf::cusp_validate(e, 1));
  }
}

TEST_CASE("quasi Jacobi form of weight 2") {
  QZSeries e21_series = e2_1(Rational(8));
  CHECK(e21_series.weight() == 2);
  CHECK(e21_series.index() == 1);
  CHECK(e21_series.coeff(Rational(0), 0) == 1);
  CHECK(e21_series.coeff(Rational(0), 1) == 0);
  CHECK(e21_series.coeff(Rational(0), -1) == 0);
}

TEST_CASE("cusp forms of weight 10 and 12") {
  QZSeries p10 = phi_10_1(Rational(8));
  CHECK(p10.coeff(Rational(1), 0) == -2);
  CHECK(p10.coeff(Rational(1), 1) == 1);
  CHECK(p10.coeff(Rational(1), -1) == 1);
  CHECK(jf::cusp_validate(p10, 1));

  QZSeries p12 = phi_12_1(Rational(8));
  CHECK(p12.coeff(Rational(1), 0) == 10);
  CHECK(p12.coeff(Rational(1), 1) == 1);
  CHECK(p12.coeff(Rational(1), -1) == 1);
  CHECK(jf::cusp_validate(p12, 1));
}

TEST_CASE("cusp forms factor through Delta") {
  Rational order(15);
  CHECK(eq_to_order(phi_10_1(order), mul(delta(order), phi_m2_1(order)), order));
  CHECK(eq_to_order(phi_12_1(order), mul(delta(order), phi_0_1(order)), order));
}

TEST_CASE("the two weight-10 constructions agree") {
  Rational order(10);
  QZSeries from_eisenstein = scale(
      q(1, 144), sub(mul(eisenstein(6, order), jacobi_eisenstein_index1(4, order)),
                     mul(eisenstein(4, order), jacobi_eisenstein_index1(6, order))));
  CHECK(eq_to_order(from_eisenstein, mul(delta(order), phi_m2_1(order)), order));
}

TEST_CASE("the weight-0 generator is the singular product construction") {
  Rational order(10);
  FormWithSingular wp = weierstrass_p(order);
  QZSeries pm2 = phi_m2_1(order);
  QZSeries prod = add(mul(wp.regular, pm2), mul_singular(pm2, *wp.singular));
  CHECK(eq_to_order(scale(Rational(12), prod), phi_0_1(order), order));
}

TEST_CASE("even-weight catalog forms are symmetric with single-discriminant values") {
  for (const char* name : {"PhiM2_1", "Phi0_1", "E4_1", "E6_1", "Phi10_1", "Phi12_1"}) {
    QZSeries f = build_form(name, Rational(10));
    CHECK_MESSAGE(jf::symmetry_check(f), name);

    // Index 1: the coefficient may depend only on the discriminant 4n - r^2.
    std::map<Rational, Rational> by_disc;
    bool consistent = true;
    for (const auto& [n_scaled, poly] : f.levels()) {
      for (const auto& [r, c] : poly) {
        Rational disc = Rational(4) * f.q_exponent(n_scaled) - Rational(r * r);
        auto [it, fresh] = by_disc.emplace(disc, c);
        if (!fresh && it->second != c) consistent = false;
      }
    }
    CHECK_MESSAGE(consistent, name);
  }
}

TEST_CASE("catalog lookup") {
  CHECK(find_form("E4") != nullptr);
  CHECK(find_form("Phi12_1") != nullptr);
  CHECK(find_form("nonsense") == nullptr);
  CHECK(catalog().size() >= 20);

  const FormCatalogEntry* e = find_form("Phi10_1");
  REQUIRE(e != nullptr);
  CHECK(e->weight == 10);
  CHECK(e->index == 1);
  CHECK(e->kind == FormKind::jacobi_cusp);
}

TEST_CASE("memoized builds are stable") {
  QZSeries a = build_form("Phi10_1", Rational(6));
  QZSeries b = build_form("Phi10_1", Rational(6));
  CHECK(eq_to_order(a, b, Rational(6)));
}

TEST_CASE("rebuild stability across the catalog") {
  jftest::SuiteResult res = jftest::rebuild_stability_suite();
  CHECK(res.cases >= 100);
  CHECK_MESSAGE(res.failures == 0, res.first_failure);
}
