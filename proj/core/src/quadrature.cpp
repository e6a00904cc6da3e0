#include "jf/quadrature.hpp"

namespace jf::num {

namespace {

enum class Rule { tanh_sinh, exp_sinh, sinh_sinh };

struct Node {
  Real x;
  Real dx;
  bool usable = true;
};

// Abscissa x(t) and weight x'(t) for one transform.  c, d are the center
// and half-width of the finite interval (unused by the other rules).
Node make_node(Rule rule, const Real& t, const Real& half_pi, const Real& c, const Real& d) {
  mpfr_prec_t prec = t.precision();
  Real sh = Real::zero(prec);
  Real ch = Real::zero(prec);
  mpfr_sinh_cosh(sh.raw(), ch.raw(), t.raw(), MPFR_RNDN);
  Real v = half_pi * sh;
  Real dv = half_pi * ch;
  Node n{Real::zero(prec), Real::zero(prec)};
  switch (rule) {
    case Rule::tanh_sinh: {
      Real th = Real::zero(prec);
      Real chv = Real::zero(prec);
      mpfr_tanh(th.raw(), v.raw(), MPFR_RNDN);
      mpfr_cosh(chv.raw(), v.raw(), MPFR_RNDN);
      n.x = c + d * th;
      n.dx = d * dv / (chv * chv);
      if (n.x == c + d || n.x == c - d) n.usable = false;
      break;
    }
    case Rule::exp_sinh: {
      Real ex = Real::zero(prec);
      mpfr_exp(ex.raw(), v.raw(), MPFR_RNDN);
      n.x = ex;
      n.dx = ex * dv;
      if (n.x.is_zero() || n.x.is_inf()) n.usable = false;
      break;
    }
    case Rule::sinh_sinh: {
      Real shv = Real::zero(prec);
      Real chv = Real::zero(prec);
      mpfr_sinh_cosh(shv.raw(), chv.raw(), v.raw(), MPFR_RNDN);
      n.x = shv;
      n.dx = chv * dv;
      if (n.x.is_inf()) n.usable = false;
      break;
    }
  }
  return n;
}

QuadratureResult drive(Rule rule, const Integrand& f, const Real& a, const Real& b,
                       const Real& target_rel, mpfr_prec_t prec, int max_level) {
  const Real half_pi = Real::pi(prec) / Real(2L);
  const Real c = (rule == Rule::tanh_sinh) ? (a + b) / Real(2L) : Real(0L);
  const Real d = (rule == Rule::tanh_sinh) ? (b - a) / Real(2L) : Real(0L);
  const double t_max = 7.0;

  Real cutoff = Real::zero(prec);
  mpfr_set_si_2exp(cutoff.raw(), 1, -static_cast<long>(prec) - 20, MPFR_RNDN);

  auto g = [&](const Real& t) -> Real {
    Node n = make_node(rule, t, half_pi, c, d);
    if (!n.usable) return Real::zero(prec);
    Real fx = f(n.x);
    if (fx.is_nan() || fx.is_inf()) return Real::zero(prec);
    return fx * n.dx;
  };

  QuadratureResult res;
  Real h = Real::zero(prec);
  mpfr_set_si(h.raw(), 1, MPFR_RNDN);
  Real estimate = Real::zero(prec);

  for (int level = 0; level <= max_level; ++level) {
    if (level > 0) mpfr_div_2ui(h.raw(), h.raw(), 1, MPFR_RNDN);

    // New nodes of this level: all integer multiples of h at level 0,
    // odd multiples afterwards.
    Real level_sum = Real::zero(prec);
    Real max_term = Real::zero(prec);
    const double h_d = mpfr_get_d(h.raw(), MPFR_RNDN);
    for (int dir = 0; dir < 2; ++dir) {
      long j0 = (level == 0) ? (dir == 0 ? 0 : 1) : 1;
      long stride = (level == 0) ? 1 : 2;
      int tiny_run = 0;
      for (long j = j0; static_cast<double>(j) * h_d <= t_max; j += stride) {
        Real t = h * Real(j);
        if (dir == 1) t = -t;
        Real term = g(t);
        level_sum += term;
        if (abs(term) > max_term) max_term = abs(term);
        Real ref = max_term;
        Real carried = abs(estimate) / h;
        if (carried > ref) ref = carried;
        if (!ref.is_zero() && abs(term) <= cutoff * ref) {
          if (++tiny_run >= 3) break;
        } else {
          tiny_run = 0;
        }
      }
    }

    Real next = (level == 0) ? h * level_sum : estimate / Real(2L) + h * level_sum;
    if (level >= 2) {
      Real delta = abs(next - estimate);
      res.levels = level;
      res.error_estimate = delta;
      if (delta <= target_rel * abs(next) || (next.is_zero() && delta.is_zero())) {
        res.value = next;
        res.converged = true;
        return res;
      }
    }
    estimate = next;
  }
  res.value = estimate;
  res.converged = false;
  res.levels = max_level;
  return res;
}

}  // namespace

QuadratureResult integrate_finite(const Integrand& f, const Real& a, const Real& b,
                                  const Real& target_rel, mpfr_prec_t prec, int max_level) {
  return drive(Rule::tanh_sinh, f, a, b, target_rel, prec, max_level);
}

QuadratureResult integrate_zero_inf(const Integrand& f, const Real& target_rel, mpfr_prec_t prec,
                                    int max_level) {
  return drive(Rule::exp_sinh, f, Real(0L), Real(0L), target_rel, prec, max_level);
}

QuadratureResult integrate_real_line(const Integrand& f, const Real& target_rel, mpfr_prec_t prec,
                                     int max_level) {
  return drive(Rule::sinh_sinh, f, Real(0L), Real(0L), target_rel, prec, max_level);
}

}  // namespace jf::num
