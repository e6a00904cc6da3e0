#include "jf/real.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace jf::num {

namespace {

std::atomic<mpfr_prec_t> g_default_prec{256};

mpfr_prec_t joint_prec(const Real& a, const Real& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

void Real::set_default_precision(mpfr_prec_t bits) {
  if (bits < MPFR_PREC_MIN || bits > 1 << 20) throw std::invalid_argument("bad precision");
  g_default_prec.store(bits);
}

mpfr_prec_t Real::default_precision() { return g_default_prec.load(); }

Real Real::pi(mpfr_prec_t prec) {
  Real r = Real::zero(prec);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

Real Real::infinity(mpfr_prec_t prec) {
  Real r = Real::zero(prec);
  mpfr_set_inf(r.raw(), 1);
  return r;
}

#define JF_BINOP(op, fn)                                \
  Real operator op(const Real& a, const Real& b) {      \
    Real r = Real::zero(joint_prec(a, b));                           \
    fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);           \
    return r;                                           \
  }
JF_BINOP(+, mpfr_add)
JF_BINOP(-, mpfr_sub)
JF_BINOP(*, mpfr_mul)
JF_BINOP(/, mpfr_div)
#undef JF_BINOP

Real operator-(const Real& a) {
  Real r = Real::zero(a.precision());
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

Real& operator+=(Real& a, const Real& b) { a = a + b; return a; }
Real& operator-=(Real& a, const Real& b) { a = a - b; return a; }
Real& operator*=(Real& a, const Real& b) { a = a * b; return a; }

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
bool operator!=(const Real& a, const Real& b) { return !(a == b); }
bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }

#define JF_UNFN(name, fn)            \
  Real name(const Real& a) {         \
    Real r = Real::zero(a.precision());           \
    fn(r.raw(), a.raw(), MPFR_RNDN); \
    return r;                        \
  }
JF_UNFN(abs, mpfr_abs)
JF_UNFN(sqrt, mpfr_sqrt)
JF_UNFN(exp, mpfr_exp)
JF_UNFN(log, mpfr_log)
JF_UNFN(atan, mpfr_atan)
JF_UNFN(erf, mpfr_erf)
#undef JF_UNFN

Real pow(const Real& base, const Real& e) {
  Real r = Real::zero(joint_prec(base, e));
  mpfr_pow(r.raw(), base.raw(), e.raw(), MPFR_RNDN);
  return r;
}

Real pow(const Real& base, long e) {
  Real r = Real::zero(base.precision());
  mpfr_pow_si(r.raw(), base.raw(), e, MPFR_RNDN);
  return r;
}

Real pow_half(const Real& base, long twice_e) {
  if (twice_e % 2 == 0) return pow(base, twice_e / 2);
  Real half = Real::zero(base.precision());
  mpfr_set_si_2exp(half.raw(), twice_e, -1, MPFR_RNDN);  // exact: twice_e / 2
  return pow(base, half);
}

Real gamma_half(long twice_a, mpfr_prec_t prec) {
  if (twice_a <= 0) throw std::domain_error("gamma_half: argument must be positive");
  if (twice_a % 2 == 0) {
    // Gamma(n) = (n-1)!
    Integer f = factorial(static_cast<unsigned long>(twice_a / 2 - 1));
    Real r = Real::zero(prec);
    mpfr_set_z(r.raw(), f.get_mpz_t(), MPFR_RNDN);
    return r;
  }
  // Gamma(n + 1/2) = sqrt(pi) (2n)! / (4^n n!)
  long n = (twice_a - 1) / 2;
  Rational factor(factorial(static_cast<unsigned long>(2 * n)),
                  factorial(static_cast<unsigned long>(n)));
  factor /= pow_rational(make_rational(4), n);
  factor.canonicalize();
  return sqrt(Real::pi(prec)) * Real(factor, prec);
}

Real rel_diff(const Real& a, const Real& b) {
  Real denom = abs(a) > abs(b) ? abs(a) : abs(b);
  if (denom.is_zero()) return Real(0L);
  return abs(a - b) / denom;
}

std::string to_string(const Real& a, int digits) {
  if (a.is_nan()) return "nan";
  if (a.is_inf()) return a.sign() > 0 ? "inf" : "-inf";
  if (digits <= 0)
    digits = static_cast<int>(static_cast<double>(a.precision()) * 0.30103) + 2;
  std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, a.raw());
  return std::string(buf.data());
}

}  // namespace jf::num
