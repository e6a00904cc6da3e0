#include <benchmark/benchmark.h>

#include "jf/adjoint.hpp"
#include "jf/forms.hpp"
#include "jf/hyp2f1.hpp"
#include "jf/operators.hpp"
#include "jf/spaces.hpp"

using jf::QZSeries;
using jf::Rational;

namespace {

void bm_series_mul(benchmark::State& state) {
  long order = state.range(0);
  QZSeries a = jf::forms::build_form("Phi0_1", Rational(order));
  QZSeries b = jf::forms::build_form("PhiM2_1", Rational(order));
  for (auto _ : state) {
    QZSeries c = mul(a, b);
    benchmark::DoNotOptimize(c.term_count());
  }
}
BENCHMARK(bm_series_mul)->Arg(10)->Arg(20)->Arg(40);

void bm_delta(benchmark::State& state) {
  long order = state.range(0);
  for (auto _ : state) {
    QZSeries d = jf::forms::delta(Rational(order));
    benchmark::DoNotOptimize(d.term_count());
  }
}
BENCHMARK(bm_delta)->Arg(20)->Arg(50)->Arg(100);

void bm_phi10(benchmark::State& state) {
  long order = state.range(0);
  for (auto _ : state) {
    QZSeries f = jf::forms::phi_10_1(Rational(order));
    benchmark::DoNotOptimize(f.term_count());
  }
}
BENCHMARK(bm_phi10)->Arg(20)->Arg(50)->Arg(100);

void bm_heat_shift(benchmark::State& state) {
  long order = state.range(0);
  QZSeries f = jf::forms::build_form("Phi10_1", Rational(order));
  for (auto _ : state) {
    QZSeries g = jf::ops::heat_shift(10, 1, f);
    benchmark::DoNotOptimize(g.term_count());
  }
}
BENCHMARK(bm_heat_shift)->Arg(20)->Arg(40);

void bm_membership(benchmark::State& state) {
  long order = state.range(0);
  Rational ord(order);
  QZSeries f = jf::forms::build_form("Phi12_1", Rational(order + 1));
  auto basis = jf::spaces::weak_basis(12, 1, Rational(order + 1));
  for (auto _ : state) {
    auto mem = jf::spaces::membership_solve(f, basis.elements, ord);
    benchmark::DoNotOptimize(mem.in_span);
  }
}
BENCHMARK(bm_membership)->Arg(10)->Arg(15);

void bm_adjoint_l_entry(benchmark::State& state) {
  long pmax = state.range(0);
  QZSeries f = jf::forms::build_form("Phi10_1", Rational(pmax + 2));
  jf::num::CoefficientSource src(f);
  for (auto _ : state) {
    auto e = jf::num::adjoint_l_coeff(src, 8, 1, 1, 0, pmax, 256);
    benchmark::DoNotOptimize(e.value.to_double());
  }
}
BENCHMARK(bm_adjoint_l_entry)->Arg(50)->Arg(100)->Arg(200);

void bm_adjoint_o_entry(benchmark::State& state) {
  long pmax = state.range(0);
  QZSeries f = jf::forms::build_form("Phi10_1", Rational(pmax + 2));
  jf::num::CoefficientSource src(f);
  for (auto _ : state) {
    auto e = jf::num::adjoint_o_terms(src, 8, 1, 1, 1, pmax, 256);
    benchmark::DoNotOptimize(e.value.to_double());
  }
}
BENCHMARK(bm_adjoint_o_entry)->Arg(50)->Arg(100);

void bm_hyp2f1(benchmark::State& state) {
  long k = state.range(0);
  jf::num::Real x(-3, 256);
  for (auto _ : state) {
    auto v = jf::num::hyp2f1_half_kp1(k, x);
    benchmark::DoNotOptimize(v.to_double());
  }
}
BENCHMARK(bm_hyp2f1)->Arg(4)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
