#include "jf/operators.hpp"

namespace jf::ops {

namespace {

Rational working_order(const QZSeries& f) {
  if (!f.order()) throw SeriesError("operator needs a truncated series (E2 factor is infinite)");
  return *f.order();
}

QZSeries e2_times(const Rational& c, const QZSeries& f) {
  QZSeries e2 = forms::eisenstein(2, working_order(f));
  return scale(c, mul(e2, f));
}

QZSeries stamp(QZSeries s, int k, const QZSeries& f) {
  s.set_weight(k + 2);
  s.set_index(f.index());
  return s;
}

}  // namespace

QZSeries serre_derivative(int k, const QZSeries& f) {
  QZSeries out = d_tau(f);
  if (k != 0) out = sub(out, e2_times(make_rational(k, 12), f));
  return stamp(std::move(out), k, f);
}

QZSeries heat_shift(int k, int m, const QZSeries& f) {
  QZSeries out = heat(m, f);
  Rational c = make_rational(static_cast<long>(m) * (2 * k - 1), 6);
  if (c != 0) out = sub(out, e2_times(c, f));
  return stamp(std::move(out), k, f);
}

namespace {

QZSeries j1_dz(const QZSeries& f) {
  QZSeries dz = d_z(f);
  forms::FormWithSingular j1 = forms::jn_deformed(1, working_order(f));
  return add(mul(j1.regular, dz), mul_singular(dz, *j1.singular));
}

QZSeries j2_times(int m, const QZSeries& f) {
  QZSeries j2 = forms::jn_deformed(2, working_order(f)).regular;
  return scale(m, mul(j2, f));
}

}  // namespace

QZSeries oberdieck(int k, int m, const QZSeries& f) {
  QZSeries out = sub(d_tau(f), e2_times(make_rational(k, 12), f));
  out = sub(out, j1_dz(f));
  if (m != 0) out = add(out, j2_times(m, f));
  return stamp(std::move(out), k, f);
}

QZSeries jacobi_serre(int k, int m, const QZSeries& f) {
  QZSeries bracket = d_z(d_z(f));
  bracket = sub(bracket, j1_dz(f));
  if (m != 0) {
    bracket = add(bracket, j2_times(m, f));
    bracket = sub(bracket, e2_times(make_rational(m, 6), f));
  }
  QZSeries direct = sub(d_tau(f), e2_times(make_rational(k, 12), f));
  direct = add(direct, scale(make_rational(1, 1 - 4 * m), bracket));

  QZSeries dual = scale(make_rational(1, 4 * m - 1), sub(heat_shift(k, m, f), oberdieck(k, m, f)));
  Rational n = *direct.order() < *dual.order() ? *direct.order() : *dual.order();
  if (!eq_to_order(direct, dual, n))
    throw PathMismatch("jacobi_serre: direct and decomposed paths disagree");
  return stamp(std::move(direct), k, f);
}

namespace {

std::optional<std::pair<Rational, long>> first_position(const QZSeries& s) {
  if (s.is_zero()) return std::nullopt;
  const auto& [lev, p] = *s.levels().begin();
  return std::make_pair(make_rational(lev, s.grid_denom()), p.begin()->first);
}

IdentityReport make_report(std::string name, QZSeries residual) {
  IdentityReport rep;
  rep.name = std::move(name);
  rep.exact = residual.is_zero();
  rep.zero_at_z0 = restrict_z0(residual).is_zero();
  rep.first_failure = first_position(residual);
  rep.residual = std::move(residual);
  return rep;
}

}  // namespace

std::vector<IdentityReport> verify_ramanujan(const Rational& order) {
  QZSeries e2 = forms::eisenstein(2, order);
  QZSeries e4 = forms::eisenstein(4, order);
  QZSeries e6 = forms::eisenstein(6, order);
  std::vector<IdentityReport> out;
  out.push_back(make_report(
      "serre(E2) + E2^2/12 + E4/12",
      add(serre_derivative(2, e2),
          add(scale(make_rational(1, 12), mul(e2, e2)), scale(make_rational(1, 12), e4)))));
  out.push_back(make_report("serre(E4) + E6/3",
                            add(serre_derivative(4, e4), scale(make_rational(1, 3), e6))));
  out.push_back(make_report("serre(E6) + E4^2/2",
                            add(serre_derivative(6, e6), scale(make_rational(1, 2), mul(e4, e4)))));
  return out;
}

std::vector<IdentityReport> verify_ramanujan_jacobi(const Rational& order) {
  QZSeries e2 = forms::eisenstein(2, order);
  QZSeries e4 = forms::eisenstein(4, order);
  QZSeries e2_1 = forms::e2_1(order);
  QZSeries e4_1 = forms::jacobi_eisenstein_index1(4, order);
  QZSeries e6_1 = forms::jacobi_eisenstein_index1(6, order);
  QZSeries phi = forms::phi_m2_1(order);

  std::vector<IdentityReport> out;
  QZSeries r1 = jacobi_serre(2, 1, e2_1);
  r1 = add(r1, scale(make_rational(1, 12), mul(e2, e2_1)));
  r1 = add(r1, scale(make_rational(1, 16), mul(d_tau(e4), phi)));
  r1 = add(r1, scale(make_rational(1, 12), e4_1));
  out.push_back(make_report("jserre(E2_1) + E2 E2_1/12 + dtau(E4) phi_{-2,1}/16 + E4_1/12",
                            std::move(r1)));
  out.push_back(make_report("jserre(E4_1) + E6_1/3",
                            add(jacobi_serre(4, 1, e4_1), scale(make_rational(1, 3), e6_1))));
  out.push_back(make_report(
      "jserre(E6_1) + E4 E4_1/2",
      add(jacobi_serre(6, 1, e6_1), scale(make_rational(1, 2), mul(e4, e4_1)))));
  return out;
}

}  // namespace jf::ops
