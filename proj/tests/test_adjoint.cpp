#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "jf/adjoint.hpp"
#include "jf/forms.hpp"

#include <stdexcept>

using jf::QZSeries;
using jf::Rational;
using namespace jf::num;

namespace {

Real tol2(int bits) { return pow(Real(2, 256), static_cast<long>(-bits)); }

CoefficientSource source(const char* name, long order) {
  return CoefficientSource(jf::forms::build_form(name, Rational(order)));
}

}  // namespace

TEST_CASE("coefficient source validation and lookup") {
  CoefficientSource src = source("Phi10_1", 12);
  CHECK(src.order() == Rational(12));
  CHECK(src.coeff(1, 0) == -2);
  CHECK(src.coeff(1, 1) == 1);
  CHECK(src.coeff(1, 5) == 0);
  CHECK_THROWS_AS(src.coeff(12, 0), jf::InsufficientOrderError);

  // Fractional grids and unbounded polynomials are not usable sources.
  CHECK_THROWS_AS(CoefficientSource(jf::forms::build_form("Theta1Sq", Rational(4))),
                  jf::GridError);
  CHECK_THROWS_AS(CoefficientSource(QZSeries::constant(Rational(1))),
                  jf::SeriesError);
}

TEST_CASE("normalizing constant against its exact rational core") {
  // beta(10,1,1,0) pi^2 = (323/4) 4^(17/2) = 323 * 2^15 = 10584064.
  Real beta = beta_const(10, 1, 1, 0, 256);
  Real pi = Real::pi(256);
  CHECK(rel_diff(beta * pi * pi, Real(Rational(10584064), 256)) < tol2(245));

  CHECK_THROWS_AS(beta_const(10, 1, 0, 1, 256), std::domain_error);
  CHECK_THROWS_AS(beta_const(10, 1, 1, 2, 256), std::domain_error);
}

TEST_CASE("normalizing constant follows its discriminant power law") {
  // beta(k,m,l1,w) / beta(k,m,l2,w) = (D1/D2)^(k-3/2).
  Real b1 = beta_const(8, 1, 3, 1, 256);
  Real b2 = beta_const(8, 1, 1, 1, 256);
  Real want = pow_half(Real(Rational(11, 3), 256), 2 * 8 - 3);
  CHECK(rel_diff(b1 / b2, want) < tol2(240));
}

TEST_CASE("zero input gives exactly zero coefficients") {
  CoefficientSource zero(QZSeries::zero(1, Rational(100)));
  AdjointEntry e = adjoint_l_coeff(zero, 8, 1, 1, 0, 50, 256);
  CHECK(e.value.is_zero());
  CHECK(e.terms.at("A1").is_zero());
  CHECK(e.terms.at("A2").is_zero());

  AdjointEntry o = adjoint_o_terms(zero, 8, 1, 1, 1, 50, 256);
  CHECK(o.value.is_zero());
}

TEST_CASE("evaluators are linear in the source expansion") {
  QZSeries phi = jf::forms::build_form("Phi10_1", Rational(80));
  CoefficientSource one(phi);
  CoefficientSource two(scale(Rational(2), phi));

  for (long w : {0L, 1L}) {
    AdjointEntry j1 = adjoint_j_coeff(one, 8, 1, 1, w, 60, 256);
    AdjointEntry j2 = adjoint_j_coeff(two, 8, 1, 1, w, 60, 256);
    CHECK(rel_diff(j2.value, Real(2) * j1.value) < tol2(200));
  }
}

TEST_CASE("term breakdown sums to the entry value") {
  CoefficientSource src = source("Phi10_1", 80);

  AdjointEntry l = adjoint_l_coeff(src, 8, 1, 2, 1, 60, 256);
  CHECK(l.value == l.terms.at("A1") + l.terms.at("A2"));

  AdjointEntry o = adjoint_o_terms(src, 8, 1, 2, 1, 60, 256);
  Real sum = Real::zero(256);
  for (const auto& [name, v] : o.terms) sum += v;
  CHECK(rel_diff(sum, o.value) < tol2(240));
  CHECK(o.terms.size() == 6);
}

TEST_CASE("the combined evaluator is assembled from the other two") {
  CoefficientSource src = source("Phi10_1", 80);
  AdjointEntry l = adjoint_l_coeff(src, 8, 1, 1, 1, 60, 256);
  AdjointEntry o = adjoint_o_terms(src, 8, 1, 1, 1, 60, 256);
  AdjointEntry j = adjoint_j_coeff(src, 8, 1, 1, 1, 60, 256);
  Real three(3, 256);
  CHECK(j.value == (l.value - o.value) / three);
  CHECK(j.terms.at("Astar") == l.value / three);
  CHECK(j.terms.at("A5") == -(o.terms.at("A5") / three));
}

TEST_CASE("terms with a w factor vanish at w = 0") {
  CoefficientSource src = source("Phi10_1", 80);
  AdjointEntry o = adjoint_o_terms(src, 8, 1, 2, 0, 60, 256);
  CHECK(o.terms.at("A31").is_zero());
  CHECK(o.terms.at("A32").is_zero());
  CHECK(o.terms.at("A4").is_zero());
  CHECK_FALSE(o.terms.at("A1").is_zero());
  CHECK_FALSE(o.terms.at("A5").is_zero());
}

TEST_CASE("insufficient expansion order is rejected") {
  CoefficientSource src = source("Phi10_1", 12);
  CHECK_THROWS_AS(adjoint_l_coeff(src, 8, 1, 1, 0, 50, 256),
                  jf::InsufficientOrderError);
}

TEST_CASE("tail bound majorizes the effect of doubling pmax") {
  QZSeries phi = jf::forms::build_form("Phi10_1", Rational(130));
  CoefficientSource src(phi);
  for (long w : {0L, 1L}) {
    AdjointEntry half = adjoint_l_coeff(src, 8, 1, 1, w, 60, 256);
    AdjointEntry full = adjoint_l_coeff(src, 8, 1, 1, w, 120, 256);
    CHECK(abs(full.value - half.value) <= half.tail_bound);
    CHECK(full.tail_bound < half.tail_bound);
  }
}

TEST_CASE("the truncation, not the float precision, dominates") {
  CoefficientSource src = source("Phi10_1", 70);
  for (long w : {0L, 1L}) {
    AdjointEntry lo = adjoint_l_coeff(src, 8, 1, 1, w, 50, 128);
    AdjointEntry hi = adjoint_l_coeff(src, 8, 1, 1, w, 50, 256);
    CHECK(rel_diff(lo.value, hi.value) < tol2(100));

    AdjointEntry jlo = adjoint_j_coeff(src, 8, 1, 1, w, 50, 128);
    AdjointEntry jhi = adjoint_j_coeff(src, 8, 1, 1, w, 50, 256);
    CHECK(rel_diff(jlo.value, jhi.value) < tol2(100));
  }
}

TEST_CASE("table construction filters the grid and keeps a fixed order") {
  CoefficientSource src = source("Phi10_1", 80);
  AdjointTable t = build_table(src, AdjointOperator::heat_shift, 8, 1, 2, 3, 60, 256);
  // w <= wmax but only points with 4lm - w^2 > 0 are kept:
  // l=1: w in {0,1}; l=2: w in {0,1,2}.
  REQUIRE(t.entries.size() == 5);
  CHECK(t.entries[0].l == 1);
  CHECK(t.entries[0].w == 0);
  CHECK(t.entries[1].w == 1);
  CHECK(t.entries[2].l == 2);
  CHECK(t.entries[4].w == 2);
  CHECK(t.precision_bits == 256);
  CHECK(std::string(operator_name(t.op)) == "L");
}

TEST_CASE("proportionality detection and its mutation control") {
  // The heat-shift adjoint of the weight-12 cusp form is proportional to
  // the weight-10 cusp form; a corrupted divisor-sum sign must destroy
  // that proportionality.
  QZSeries phi12 = jf::forms::build_form("Phi12_1", Rational(130));
  CoefficientSource src(phi12);
  CoefficientSource ref = source("Phi10_1", 10);

  AdjointTable t = build_table(src, AdjointOperator::heat_shift, 10, 1, 3, 1, 120, 256);
  REQUIRE(t.entries.size() == 6);
  RatioReport good = ratio_constancy(t, ref);
  CHECK(good.max_rel_deviation < Real(Rational(1, 1000), 256));
  CHECK_FALSE(good.ratio.is_zero());

  AdjointTable corrupted = t;
  for (auto& e : corrupted.entries)
    e.value = e.terms.at("A1") - e.terms.at("A2");
  RatioReport bad = ratio_constancy(corrupted, ref);
  CHECK(bad.max_rel_deviation > Real(Rational(1, 10), 256));
}

TEST_CASE("ratio constancy rejects vanishing reference coefficients") {
  CoefficientSource src = source("Phi10_1", 80);
  AdjointTable t = build_table(src, AdjointOperator::heat_shift, 8, 1, 1, 1, 60, 256);
  CoefficientSource zero_ref(QZSeries::zero(1, Rational(50)));
  CHECK_THROWS_AS(ratio_constancy(t, zero_ref), std::domain_error);

  AdjointTable empty;
  CHECK_THROWS_AS(ratio_constancy(empty, src), std::domain_error);
}

TEST_CASE("growth constant scans the support") {
  CoefficientSource src = source("Phi10_1", 12);
  Real c = src.growth_constant(8, 1, 256);
  CHECK(c > Real::zero(256));
  // c(1,0) = -2 at discriminant 4 contributes 4 * 2 / 4^(9/2) = 2^-6.
  Real floor_val = Real(8, 256) / pow_half(Real(4, 256), 8 + 1);
  CHECK(c >= floor_val);
}
