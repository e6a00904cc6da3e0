#include "jf/qzseries.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace jf {

namespace {

// Smallest scaled key L such that n_scaled >= L exactly when
// n_scaled / grid >= order, i.e. L = ceil(order * grid).
long scaled_limit(const Rational& order, int grid) {
  Integer num = order.get_num() * grid;
  Integer den = order.get_den();
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (!q.fits_slong_p()) throw SeriesError("order bound out of range");
  return q.get_si();
}

std::optional<Rational> min_order(const std::optional<Rational>& a,
                                  const std::optional<Rational>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

// Scale factor between two allowed grids; the unified grid is their lcm,
// which is again allowed because every allowed value divides 24 and the
// possible lcms avoid 3, 6, 12.
int grid_lcm(int a, int b) {
  int l = std::lcm(a, b);
  if (!grid_allowed(l)) throw GridError("incompatible grid denominators");
  return l;
}

}  // namespace

bool grid_allowed(int grid_denom) {
  return std::find(kAllowedGrids.begin(), kAllowedGrids.end(), grid_denom) !=
         kAllowedGrids.end();
}

bool singular_factor_valid(const SingularFactor& s) {
  if (s.pole_order < 0) return false;
  if (s.numer.empty()) return true;
  Rational at_one = 0;
  for (const auto& [r, c] : s.numer) {
    (void)r;
    at_one += c;
  }
  return at_one != 0 || s.pole_order == 0;
}

NonDivisibleError::NonDivisibleError(Rational q_exp, Rational rem)
    : SeriesError("level q^" + rational_to_string(q_exp) +
                  " not divisible by (1 - zeta): remainder " +
                  rational_to_string(rem)),
      q_exponent(std::move(q_exp)),
      remainder(std::move(rem)) {}

void QZSeries::purge() {
  std::optional<long> limit;
  if (order_) limit = scaled_limit(*order_, grid_);
  for (auto lit = levels_.begin(); lit != levels_.end();) {
    if (limit && lit->first >= *limit) {
      lit = levels_.erase(lit);
      continue;
    }
    ZetaPoly& p = lit->second;
    for (auto cit = p.begin(); cit != p.end();) {
      if (cit->second == 0)
        cit = p.erase(cit);
      else
        ++cit;
    }
    if (p.empty())
      lit = levels_.erase(lit);
    else
      ++lit;
  }
}

QZSeries QZSeries::zero(int grid_denom, std::optional<Rational> order) {
  if (!grid_allowed(grid_denom)) throw GridError("grid denominator not allowed");
  QZSeries s;
  s.grid_ = grid_denom;
  s.order_ = std::move(order);
  return s;
}

QZSeries QZSeries::constant(const Rational& c) {
  QZSeries s;
  if (c != 0) s.levels_[0][0] = c;
  return s;
}

QZSeries QZSeries::monomial(const Rational& n, long r, int grid_denom) {
  if (!grid_allowed(grid_denom)) throw GridError("grid denominator not allowed");
  Rational scaled = n * grid_denom;
  if (!is_integer(scaled))
    throw GridError("exponent " + rational_to_string(n) + " not on grid 1/" +
                    std::to_string(grid_denom));
  if (!scaled.get_num().fits_slong_p()) throw SeriesError("exponent out of range");
  QZSeries s;
  s.grid_ = grid_denom;
  s.levels_[scaled.get_num().get_si()][r] = 1;
  return s;
}

QZSeries QZSeries::from_zeta_poly(const ZetaPoly& p) {
  QZSeries s;
  if (!p.empty()) s.levels_[0] = p;
  s.purge();
  return s;
}

QZSeries QZSeries::assemble(int grid_denom, std::optional<Rational> order,
                            std::map<long, ZetaPoly> levels) {
  if (!grid_allowed(grid_denom)) throw GridError("grid denominator not allowed");
  QZSeries s;
  s.grid_ = grid_denom;
  s.order_ = std::move(order);
  s.levels_ = std::move(levels);
  s.purge();
  return s;
}

std::size_t QZSeries::term_count() const {
  std::size_t n = 0;
  for (const auto& [k, p] : levels_) {
    (void)k;
    n += p.size();
  }
  return n;
}

Rational QZSeries::q_min() const {
  if (levels_.empty()) return Rational(0);
  return make_rational(levels_.begin()->first, grid_);
}

Rational QZSeries::coeff(const Rational& n, long r) const {
  if (order_ && n >= *order_)
    throw InsufficientOrderError("coeff at q^" + rational_to_string(n) +
                                 " requested beyond order " +
                                 rational_to_string(*order_));
  Rational scaled = n * grid_;
  if (!is_integer(scaled)) return Rational(0);
  if (!scaled.get_num().fits_slong_p()) return Rational(0);
  auto lit = levels_.find(scaled.get_num().get_si());
  if (lit == levels_.end()) return Rational(0);
  auto cit = lit->second.find(r);
  if (cit == lit->second.end()) return Rational(0);
  return cit->second;
}

QZSeries rescaled(const QZSeries& a, int new_grid_denom) {
  if (!grid_allowed(new_grid_denom)) throw GridError("grid denominator not allowed");
  if (new_grid_denom % a.grid_ != 0)
    throw GridError("rescale target must be a multiple of the current grid");
  if (new_grid_denom == a.grid_) return a;
  long f = new_grid_denom / a.grid_;
  QZSeries out;
  out.grid_ = new_grid_denom;
  out.order_ = a.order_;
  out.weight_ = a.weight_;
  out.index_ = a.index_;
  for (const auto& [n, p] : a.levels_) out.levels_[n * f] = p;
  return out;
}

QZSeries canonical_grid(const QZSeries& a) {
  if (a.grid_ == 1) return a;
  long g = a.grid_;
  for (const auto& [n, p] : a.levels_) {
    (void)p;
    g = std::gcd(g, n);
    if (g == 1) return a;
  }
  // Largest reduction whose quotient grid is still in the allowed set.
  for (int target : kAllowedGrids) {
    if (target >= a.grid_) break;
    if (a.grid_ % target != 0) continue;
    long f = a.grid_ / target;
    if (g % f != 0) continue;
    QZSeries out;
    out.grid_ = target;
    out.order_ = a.order_;
    out.weight_ = a.weight_;
    out.index_ = a.index_;
    for (const auto& [n, p] : a.levels_) out.levels_[n / f] = p;
    return out;
  }
  return a;
}

QZSeries add(const QZSeries& a0, const QZSeries& b0) {
  int grid = grid_lcm(a0.grid_, b0.grid_);
  const QZSeries a = rescaled(a0, grid);
  const QZSeries b = rescaled(b0, grid);
  QZSeries out;
  out.grid_ = grid;
  out.order_ = min_order(a.order_, b.order_);
  if (a.weight_ && b.weight_ && *a.weight_ == *b.weight_) out.weight_ = a.weight_;
  if (a.index_ && b.index_ && *a.index_ == *b.index_) out.index_ = a.index_;
  out.levels_ = a.levels_;
  for (const auto& [n, p] : b.levels_) {
    ZetaPoly& dst = out.levels_[n];
    for (const auto& [r, c] : p) dst[r] += c;
  }
  out.purge();
  return out;
}

QZSeries sub(const QZSeries& a, const QZSeries& b) { return add(a, neg(b)); }

QZSeries neg(const QZSeries& a) { return scale(Rational(-1), a); }

QZSeries scale(const Rational& c, const QZSeries& a) {
  QZSeries out = a;
  if (c == 0) {
    out.levels_.clear();
    return out;
  }
  for (auto& [n, p] : out.levels_) {
    (void)n;
    for (auto& [r, v] : p) {
      (void)r;
      v *= c;
    }
  }
  return out;
}

QZSeries mul(const QZSeries& a0, const QZSeries& b0) {
  int grid = grid_lcm(a0.grid_, b0.grid_);
  const QZSeries a = rescaled(a0, grid);
  const QZSeries b = rescaled(b0, grid);

  QZSeries out;
  out.grid_ = grid;
  // Tightest exact order: a term q^i of a multiplies coefficients of b at
  // exponent n - i, so c(n) is exact for n < order_a + qmin_b and
  // symmetrically.
  std::optional<Rational> oa, ob;
  if (a.order_) oa = *a.order_ + b.q_min();
  if (b.order_) ob = *b.order_ + a.q_min();
  out.order_ = min_order(oa, ob);
  if (a.weight_ && b.weight_) out.weight_ = *a.weight_ + *b.weight_;
  if (a.index_ && b.index_) out.index_ = *a.index_ + *b.index_;

  std::optional<long> limit;
  if (out.order_) limit = scaled_limit(*out.order_, grid);

  for (const auto& [na, pa] : a.levels_) {
    for (const auto& [nb, pb] : b.levels_) {
      long n = na + nb;
      if (limit && n >= *limit) break;  // nb ascends, so the rest is beyond
      ZetaPoly& dst = out.levels_[n];
      for (const auto& [ra, ca] : pa)
        for (const auto& [rb, cb] : pb) dst[ra + rb] += ca * cb;
    }
  }
  out.purge();
  return out;
}

QZSeries pow(const QZSeries& a, unsigned e) {
  QZSeries acc = QZSeries::constant(1);
  if (e == 0) return acc;
  QZSeries base = a;
  while (true) {
    if (e & 1u) acc = mul(acc, base);
    e >>= 1u;
    if (e == 0) break;
    base = mul(base, base);
  }
  return acc;
}

QZSeries d_tau(const QZSeries& a) {
  QZSeries out = a;
  out.weight_ = std::nullopt;
  for (auto& [n, p] : out.levels_) {
    Rational factor = make_rational(n, a.grid_);
    for (auto& [r, c] : p) {
      (void)r;
      c *= factor;
    }
  }
  out.purge();  // n = 0 levels vanish
  return out;
}

QZSeries d_z(const QZSeries& a) {
  QZSeries out = a;
  out.weight_ = std::nullopt;
  for (auto& [n, p] : out.levels_) {
    (void)n;
    for (auto& [r, c] : p) c *= r;
  }
  out.purge();
  return out;
}

QZSeries heat(int m, const QZSeries& a) {
  QZSeries out = a;
  out.weight_ = std::nullopt;
  for (auto& [n, p] : out.levels_) {
    Rational four_nm = make_rational(4 * n * m, a.grid_);
    for (auto& [r, c] : p) c *= four_nm - Rational(r) * r;
  }
  out.purge();
  return out;
}

QZSeries restrict_z0(const QZSeries& a) {
  QZSeries out;
  out.grid_ = a.grid_;
  out.order_ = a.order_;
  out.weight_ = a.weight_;
  out.index_ = 0;
  for (const auto& [n, p] : a.levels_) {
    Rational sum = 0;
    for (const auto& [r, c] : p) {
      (void)r;
      sum += c;
    }
    if (sum != 0) out.levels_[n][0] = sum;
  }
  return canonical_grid(out);
}

namespace {

// One synthetic division of a zeta-Laurent polynomial by (1 - zeta).
// Returns the quotient and stores the remainder p(1) in *rem.
ZetaPoly div_one_minus_zeta(const ZetaPoly& p, Rational* rem) {
  if (p.empty()) {
    *rem = 0;
    return {};
  }
  long lo = p.begin()->first;
  long hi = p.rbegin()->first;
  ZetaPoly q;
  Rational suffix = 0;
  auto it = p.rbegin();
  for (long pos = hi; pos > lo; --pos) {
    if (it != p.rend() && it->first == pos) {
      suffix += it->second;
      ++it;
    }
    if (suffix != 0) q[pos - 1] = -suffix;
  }
  if (it != p.rend() && it->first == lo) {
    suffix += it->second;
    ++it;
  }
  *rem = suffix;
  return q;
}

}  // namespace

QZSeries div_by_one_minus_zeta_pow(const QZSeries& a, int e) {
  if (e < 0) throw SeriesError("negative pole order");
  if (e == 0) return a;
  QZSeries out;
  out.grid_ = a.grid_;
  out.order_ = a.order_;
  out.index_ = a.index_;
  for (const auto& [n, p] : a.levels_) {
    ZetaPoly cur = p;
    for (int i = 0; i < e; ++i) {
      Rational rem;
      ZetaPoly q = div_one_minus_zeta(cur, &rem);
      if (rem != 0) throw NonDivisibleError(make_rational(n, a.grid_), rem);
      cur = std::move(q);
    }
    if (!cur.empty()) out.levels_[n] = std::move(cur);
  }
  out.purge();
  return out;
}

QZSeries mul_singular(const QZSeries& a, const SingularFactor& s) {
  if (!singular_factor_valid(s)) throw SeriesError("singular factor not reduced");
  return div_by_one_minus_zeta_pow(mul(a, QZSeries::from_zeta_poly(s.numer)),
                                   s.pole_order);
}

QZSeries inverse(const QZSeries& a, const std::optional<Rational>& order) {
  if (a.levels_.empty()) throw SeriesError("inverse of zero series");
  std::optional<Rational> target = min_order(a.order_, order);
  if (!target)
    throw InsufficientOrderError(
        "inverse of an exact polynomial needs an explicit order bound");

  const auto& [n0, lead] = *a.levels_.begin();
  if (lead.size() != 1)
    throw SeriesError("inverse requires a monomial lowest q-level");
  long r0 = lead.begin()->first;
  Rational c0 = lead.begin()->second;

  // a = c0 q^{n0} zeta^{r0} (1 + g): invert 1 + g level by level, then
  // shift back.  Result exact below target - 2 * n0 (scaled arithmetic).
  Rational n0_exp = make_rational(n0, a.grid_);
  Rational out_order = *target - 2 * n0_exp;
  Rational v_order = *target - n0_exp;
  long v_limit = scaled_limit(v_order, a.grid_);

  // g levels, normalized: g_s = level(n0 + s) / (c0 zeta^{r0}).
  std::map<long, ZetaPoly> g;
  for (auto it = std::next(a.levels_.begin()); it != a.levels_.end(); ++it) {
    ZetaPoly ps;
    for (const auto& [r, c] : it->second) ps[r - r0] = c / c0;
    g[it->first - n0] = std::move(ps);
  }

  std::map<long, ZetaPoly> v;
  v[0][0] = 1;
  // v_t = -sum_{0 < s <= t} g_s * v_{t-s}; iterate over target levels that
  // can actually receive contributions.
  for (long t = 1; t < v_limit; ++t) {
    ZetaPoly acc;
    for (const auto& [s, gs] : g) {
      if (s > t) break;
      auto vit = v.find(t - s);
      if (vit == v.end()) continue;
      for (const auto& [rg, cg] : gs)
        for (const auto& [rv, cv] : vit->second) acc[rg + rv] -= cg * cv;
    }
    for (auto it = acc.begin(); it != acc.end();) {
      if (it->second == 0)
        it = acc.erase(it);
      else
        ++it;
    }
    if (!acc.empty()) v[t] = std::move(acc);
  }

  QZSeries out;
  out.grid_ = a.grid_;
  out.order_ = out_order;
  for (auto& [t, p] : v) {
    ZetaPoly shifted;
    for (auto& [r, c] : p) shifted[r - r0] = c / c0;
    out.levels_[t - n0] = std::move(shifted);
  }
  out.purge();
  return out;
}

QZSeries truncated(const QZSeries& a, const Rational& order) {
  if (a.order_ && *a.order_ < order)
    throw InsufficientOrderError("cannot truncate to order " +
                                 rational_to_string(order) +
                                 ": series only exact below " +
                                 rational_to_string(*a.order_));
  QZSeries out = a;
  out.order_ = order;
  out.purge();
  return out;
}

bool eq_to_order(const QZSeries& a, const QZSeries& b, const Rational& n_order) {
  if ((a.order() && *a.order() < n_order) || (b.order() && *b.order() < n_order))
    throw InsufficientOrderError("eq_to_order: operands not exact to order " +
                                 rational_to_string(n_order));
  return truncated(sub(a, b), n_order).is_zero();
}

bool symmetry_check(const QZSeries& a) {
  for (const auto& [n, p] : a.levels()) {
    (void)n;
    for (const auto& [r, c] : p) {
      auto it = p.find(-r);
      if (it == p.end() || it->second != c) return false;
    }
  }
  return true;
}

namespace {

bool support_check(const QZSeries& a, int m, bool strict) {
  for (const auto& [n, p] : a.levels()) {
    Rational four_nm = make_rational(4 * n * m, a.grid_denom());
    for (const auto& [r, c] : p) {
      (void)c;
      Rational d = four_nm - Rational(r) * r;
      if (strict ? d <= 0 : d < 0) return false;
    }
  }
  return true;
}

}  // namespace

bool holomorphic_validate(const QZSeries& a, int m) { return support_check(a, m, false); }

bool cusp_validate(const QZSeries& a, int m) { return support_check(a, m, true); }

}  // namespace jf
