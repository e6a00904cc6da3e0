#include "jf/adjoint.hpp"

#include <algorithm>
#include <stdexcept>

#include "jf/hyp2f1.hpp"

namespace jf::num {

namespace {

std::vector<long> sigma1_sieve(long pmax) {
  std::vector<long> sig(pmax + 1, 0);
  for (long d = 1; d <= pmax; ++d)
    for (long n = d; n <= pmax; n += d) sig[n] += d;
  return sig;
}

Real half_power(long base, long twice_e, mpfr_prec_t prec) {
  return pow_half(Real(Rational(base), prec), twice_e);
}

void require_order(const CoefficientSource& src, long l, long pmax) {
  if (!(Rational(l + pmax) < src.order()))
    throw InsufficientOrderError("adjoint sums need coefficients up to q^" +
                                 std::to_string(l + pmax) +
                                 ", beyond the expansion order");
}

void require_disc(long k, long m, long l, long w, const char* who) {
  (void)k;
  if (4 * l * m - w * w <= 0)
    throw std::domain_error(std::string(who) + ": 4lm - w^2 must be positive");
}

// Bound on sum_{p > pmax} sigma_1(p) / (4pm)^(k/2) via sigma_1(p) <=
// p(1 + ln p) and an integral comparison; infinite for k <= 4 where the
// comparison integral diverges.
Real sigma_tail(long k, long m, long pmax, mpfr_prec_t prec) {
  if (k <= 4) return Real::infinity(prec);
  Real inv = Real(Rational(2, k - 4), prec);
  Real bracket = (Real(1L) + log(Real(Rational(pmax), prec))) * inv + inv * inv;
  return half_power(4 * m, -k, prec) *
         pow_half(Real(Rational(pmax), prec), -(k - 4)) * bracket;
}

// sigma_1-weighted divisor sum shared by the two adjoints:
//   sum_{p=1}^{pmax} sigma_1(p) c(l+p, w) / (4(l+p)m - w^2)^(k+1/2)
Real divisor_sum(const CoefficientSource& src, long k, long m, long l, long w,
                 long pmax, mpfr_prec_t prec) {
  std::vector<long> sig = sigma1_sieve(pmax);
  Real total = Real::zero(prec);
  for (long p = 1; p <= pmax; ++p) {
    Rational c = src.coeff(l + p, w);
    if (c == 0) continue;
    Rational num = Rational(sig[p]) * c;
    long dp = 4 * (l + p) * m - w * w;
    total += Real(num, prec) / half_power(dp, 2 * k + 1, prec);
  }
  return total;
}

// sum over u = u_begin, u_begin+1, ... while 4lm - u^2 > 0 of
//   c(l, u) / (4lm-u^2)^(k+1/2) *
//   [1 - gamma_ratio * u (4lm-u^2)^(-1/2) 2F1(1/2,k+1;3/2;-u^2/(4lm-u^2))]
Real bracket_sum(const CoefficientSource& src, const Real& gamma_ratio, long k,
                 long m, long l, long u_begin, mpfr_prec_t prec) {
  Real total = Real::zero(prec);
  for (long u = u_begin;; ++u) {
    long du = 4 * l * m - u * u;
    if (du <= 0) {
      if (u >= 0) break;
      continue;
    }
    Rational c = src.coeff(l, u);
    if (c == 0) continue;
    Rational x(-(u * u), du);
    x.canonicalize();
    Real hyp = hyp2f1_half_kp1(k, Real(x, prec));
    Real bracket = Real(1L) - gamma_ratio * Real(Rational(u), prec) /
                                  half_power(du, 1, prec) * hyp;
    total += Real(c, prec) / half_power(du, 2 * k + 1, prec) * bracket;
  }
  return total;
}

}  // namespace

CoefficientSource::CoefficientSource(const QZSeries& f) {
  if (f.grid_denom() != 1)
    throw GridError("CoefficientSource expects an integer exponent grid");
  if (!f.order())
    throw SeriesError("CoefficientSource expects a truncated expansion");
  order_ = *f.order();
  for (const auto& [n, poly] : f.levels())
    for (const auto& [r, c] : poly) coeffs_.emplace(std::make_pair(n, r), c);
}

Rational CoefficientSource::coeff(long n, long r) const {
  if (!(Rational(n) < order_))
    throw InsufficientOrderError("coefficient of q^" + std::to_string(n) +
                                 " requested beyond the expansion order");
  auto it = coeffs_.find({n, r});
  if (it == coeffs_.end()) return Rational(0);
  return it->second;
}

Real CoefficientSource::growth_constant(long k, long m, mpfr_prec_t prec) const {
  Real best = Real::zero(prec);
  for (const auto& [pos, c] : coeffs_) {
    long disc = 4 * pos.first * m - pos.second * pos.second;
    if (disc <= 0 || c == 0) continue;
    Rational ac = abs(c);
    Real cand = Real(ac, prec) / half_power(disc, k + 1, prec);
    if (cand > best) best = cand;
  }
  return Real(Rational(4), prec) * best;
}

const char* operator_name(AdjointOperator op) {
  switch (op) {
    case AdjointOperator::heat_shift: return "L";
    case AdjointOperator::oberdieck: return "O";
    case AdjointOperator::jacobi_serre: return "J";
  }
  return "?";
}

Real beta_const(long k, long m, long l, long w, mpfr_prec_t prec) {
  require_disc(k, m, l, w, "beta_const");
  long disc = 4 * l * m - w * w;
  Rational pref(m * m * (2 * k - 1) * (2 * k - 3), 4);
  pref.canonicalize();
  Real pi = Real::pi(prec);
  return Real(pref, prec) * half_power(disc, 2 * k - 3, prec) / (pi * pi);
}

AdjointEntry adjoint_l_coeff(const CoefficientSource& src, long k, long m,
                             long l, long w, long pmax, mpfr_prec_t prec) {
  require_disc(k, m, l, w, "adjoint_l_coeff");
  require_order(src, l, pmax);
  long disc = 4 * l * m - w * w;
  Real beta = beta_const(k, m, l, w, prec);

  Rational diag = (Rational(disc) - Rational(m * (2 * k - 1), 6)) * src.coeff(l, w);
  diag.canonicalize();
  Real a1 = beta * (Real(diag, prec) / half_power(disc, 2 * k + 1, prec));
  Real a2 = beta * (Real(Rational(4 * m * (2 * k - 1)), prec) *
                    divisor_sum(src, k, m, l, w, pmax, prec));

  AdjointEntry e;
  e.l = l;
  e.w = w;
  e.value = a1 + a2;
  e.terms.emplace("A1", a1);
  e.terms.emplace("A2", a2);
  e.tail_bound = beta * Real(Rational(m * (2 * k - 1)), prec) *
                 src.growth_constant(k, m, prec) * sigma_tail(k, m, pmax, prec);
  return e;
}

AdjointEntry adjoint_o_terms(const CoefficientSource& src, long k, long m,
                             long l, long w, long pmax, mpfr_prec_t prec) {
  require_disc(k, m, l, w, "adjoint_o_terms");
  require_order(src, l, pmax);
  long disc = 4 * l * m - w * w;
  Real beta = beta_const(k, m, l, w, prec);

  Rational diag = (Rational(l) - Rational(k, 12) + Rational(w, 2) + Rational(m, 6)) *
                  src.coeff(l, w);
  diag.canonicalize();
  Real a1 = Real(diag, prec) / half_power(disc, 2 * k + 1, prec);
  Real a2 = Real(Rational(2 * k), prec) * divisor_sum(src, k, m, l, w, pmax, prec);

  Real a31 = Real::zero(prec);
  Real a32 = Real::zero(prec);
  if (w != 0) {
    Real gamma_ratio =
        Real(2L) * Real(Rational(factorial(static_cast<unsigned long>(k))), prec) /
        (sqrt(Real::pi(prec)) * gamma_half(2 * k + 1, prec));
    Real half_w = Real(Rational(w, 2), prec);
    a31 = half_w * bracket_sum(src, gamma_ratio, k, m, l, w + 1, prec);
    a32 = -(half_w * bracket_sum(src, gamma_ratio, k, m, l, -w, prec));
  }

  Real s4 = Real::zero(prec);
  Real s5 = Real::zero(prec);
  for (long p = 1; p <= pmax; ++p) {
    for (long d = 1; d <= p; ++d) {
      if (p % d != 0) continue;
      Real plus = Real::zero(prec);
      Real minus = Real::zero(prec);
      long rp = w + d;
      long dp = 4 * (l + p) * m - rp * rp;
      if (dp > 0) {
        Rational c = src.coeff(l + p, rp);
        if (c != 0) plus = Real(c, prec) / half_power(dp, 2 * k + 1, prec);
      }
      long rm = w - d;
      long dm = 4 * (l + p) * m - rm * rm;
      if (dm > 0) {
        Rational c = src.coeff(l + p, rm);
        if (c != 0) minus = Real(c, prec) / half_power(dm, 2 * k + 1, prec);
      }
      if (plus.is_zero() && minus.is_zero()) continue;
      if (w != 0) s4 += plus - minus;
      s5 += Real(Rational(p / d), prec) * (plus + minus);
    }
  }
  Real a4 = Real(Rational(w), prec) * s4;
  Real a5 = Real(Rational(-2 * m), prec) * s5;

  AdjointEntry e;
  e.l = l;
  e.w = w;
  Real b1 = beta * a1;
  Real b2 = beta * a2;
  Real b31 = beta * a31;
  Real b32 = beta * a32;
  Real b4 = beta * a4;
  Real b5 = beta * a5;
  e.value = b1 + b2 + b31 + b32 + b4 + b5;
  e.terms.emplace("A1", b1);
  e.terms.emplace("A2", b2);
  e.terms.emplace("A31", b31);
  e.terms.emplace("A32", b32);
  e.terms.emplace("A4", b4);
  e.terms.emplace("A5", b5);
  // The A4/A5 divisor families admit no decaying majorant under the
  // growth-exponent model (summands of constant discriminant recur), so
  // no finite truncation bound is reported for this operator.
  e.tail_bound = Real::infinity(prec);
  return e;
}

AdjointEntry adjoint_j_coeff(const CoefficientSource& src, long k, long m,
                             long l, long w, long pmax, mpfr_prec_t prec) {
  AdjointEntry lpart = adjoint_l_coeff(src, k, m, l, w, pmax, prec);
  AdjointEntry opart = adjoint_o_terms(src, k, m, l, w, pmax, prec);
  Real denom = Real(Rational(4 * m - 1), prec);

  AdjointEntry e;
  e.l = l;
  e.w = w;
  e.value = (lpart.value - opart.value) / denom;
  e.terms.emplace("Astar", lpart.value / denom);
  for (const auto& [name, val] : opart.terms)
    e.terms.emplace(name, -(val / denom));
  e.tail_bound = (lpart.tail_bound + opart.tail_bound) / denom;
  return e;
}

AdjointTable build_table(const CoefficientSource& src, AdjointOperator op,
                         long k, long m, long lmax, long wmax, long pmax,
                         mpfr_prec_t prec) {
  AdjointTable t;
  t.op = op;
  t.k = k;
  t.m = m;
  t.pmax = pmax;
  t.precision_bits = prec;
  for (long l = 1; l <= lmax; ++l) {
    for (long w = 0; w <= wmax; ++w) {
      if (4 * l * m - w * w <= 0) continue;
      switch (op) {
        case AdjointOperator::heat_shift:
          t.entries.push_back(adjoint_l_coeff(src, k, m, l, w, pmax, prec));
          break;
        case AdjointOperator::oberdieck:
          t.entries.push_back(adjoint_o_terms(src, k, m, l, w, pmax, prec));
          break;
        case AdjointOperator::jacobi_serre:
          t.entries.push_back(adjoint_j_coeff(src, k, m, l, w, pmax, prec));
          break;
      }
    }
  }
  return t;
}

RatioReport ratio_constancy(const AdjointTable& table,
                            const CoefficientSource& reference) {
  if (table.entries.empty())
    throw std::domain_error("ratio_constancy: table has no entries");
  std::vector<Real> ratios;
  ratios.reserve(table.entries.size());
  for (const auto& e : table.entries) {
    Rational c = reference.coeff(e.l, e.w);
    if (c == 0)
      throw std::domain_error(
          "ratio_constancy: reference coefficient vanishes at a grid point");
    ratios.push_back(e.value / Real(c, e.value.precision()));
  }

  std::vector<Real> sorted = ratios;
  std::sort(sorted.begin(), sorted.end(),
            [](const Real& a, const Real& b) { return a < b; });
  std::size_t n = sorted.size();
  Real median = (n % 2 == 1)
                    ? sorted[n / 2]
                    : (sorted[n / 2 - 1] + sorted[n / 2]) / Real(2L);

  RatioReport rep{median, Real::zero(median.precision())};
  Real scale = abs(median);
  for (const auto& r : ratios) {
    Real dev = abs(r - median);
    if (scale.is_zero()) {
      if (!dev.is_zero()) rep.max_rel_deviation = Real::infinity(median.precision());
      continue;
    }
    Real rel = dev / scale;
    if (rel > rep.max_rel_deviation) rep.max_rel_deviation = rel;
  }
  return rep;
}

}  // namespace jf::num
