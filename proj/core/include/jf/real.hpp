#pragma once

/**
 * Thin RAII wrapper over MPFR for the numerical half of the library.
 * Every value carries its own precision; binary operations widen to the
 * larger operand precision and round to nearest.  The process-wide
 * default precision (256 bits unless overridden) seeds freshly created
 * values.
 */

#include "jf/rational.hpp"

#include <mpfr.h>

#include <string>

namespace jf::num {

class Real {
 public:
  Real() { mpfr_init2(v_, default_precision()); mpfr_set_zero(v_, 1); }
  Real(long x, mpfr_prec_t prec = default_precision()) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  Real(int x, mpfr_prec_t prec = default_precision())
      : Real(static_cast<long>(x), prec) {}

  /// Zero carrying an explicit precision (accumulator seed).
  static Real zero(mpfr_prec_t prec) { return Real(0L, prec); }
  Real(const Rational& q) {
    mpfr_init2(v_, default_precision());
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  Real(const Rational& q, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static void set_default_precision(mpfr_prec_t bits);
  static mpfr_prec_t default_precision();

  static Real pi(mpfr_prec_t prec = default_precision());
  static Real infinity(mpfr_prec_t prec = default_precision());

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  bool is_inf() const { return mpfr_inf_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long exponent() const { return mpfr_get_exp(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator-(const Real& a);
Real& operator+=(Real& a, const Real& b);
Real& operator-=(Real& a, const Real& b);
Real& operator*=(Real& a, const Real& b);

bool operator==(const Real& a, const Real& b);
bool operator!=(const Real& a, const Real& b);
bool operator<(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator>=(const Real& a, const Real& b);

Real abs(const Real& a);
Real sqrt(const Real& a);
Real exp(const Real& a);
Real log(const Real& a);
Real atan(const Real& a);
Real erf(const Real& a);
Real pow(const Real& base, const Real& e);
Real pow(const Real& base, long e);

/// base^(twice_e/2) for integer or half-integer exponents, the only
/// fractional powers the coefficient formulas need.
Real pow_half(const Real& base, long twice_e);

/// Gamma(twice_a/2) exactly: integer arguments via the factorial, odd
/// twice_a via Gamma(1/2) = sqrt(pi) and the recurrence, so the only
/// rounding is the final one.
Real gamma_half(long twice_a, mpfr_prec_t prec = Real::default_precision());

/// |a-b| / max(|a|, |b|); zero when both vanish.
Real rel_diff(const Real& a, const Real& b);

/// Round-trippable decimal form, "inf"/"-inf"/"nan" for specials.
/// Digit count defaults to the full precision of the value.
std::string to_string(const Real& a, int digits = 0);

}  // namespace jf::num
