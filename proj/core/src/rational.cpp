#include "jf/rational.hpp"

#include <stdexcept>

namespace jf {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rational_from_string: empty string");
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("rational_from_string: malformed rational '" + s + "'");
  if (r.get_den() == 0)
    throw std::invalid_argument("rational_from_string: zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational pow_rational(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base == 0 && e < 0)
    throw std::domain_error("pow_rational: 0 to a negative power");
  Rational acc;
  unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(acc.get_num_mpz_t(), base.get_num().get_mpz_t(), mag);
  mpz_pow_ui(acc.get_den_mpz_t(), base.get_den().get_mpz_t(), mag);
  // base was canonical, so base^|e| is canonical except for sign placement.
  acc.canonicalize();
  if (e < 0) return Rational(1) / acc;
  return acc;
}

}  // namespace jf
