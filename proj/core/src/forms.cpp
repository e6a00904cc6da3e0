#include "jf/forms.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

namespace jf::forms {

namespace {

// Smallest integer L with L >= order * grid: scaled keys below L are
// exactly the exponents below the order bound.
long scaled_ceil(const Rational& order, int grid) {
  Integer num = order.get_num() * grid;
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), order.get_den().get_mpz_t());
  if (!q.fits_slong_p()) throw SeriesError("order bound out of range");
  return q.get_si();
}

Integer ipow(unsigned long base, unsigned e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

}  // namespace

Rational bernoulli(unsigned n) {
  static std::vector<Rational> cache{Rational(1)};
  static std::mutex mu;
  std::lock_guard lock(mu);
  while (cache.size() <= n) {
    unsigned m = static_cast<unsigned>(cache.size());
    // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1
    Rational acc = 0;
    for (unsigned j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * cache[j];
    cache.push_back(-acc / Rational(m + 1));
  }
  return cache[n];
}

Integer sigma(unsigned k, unsigned long n) {
  if (n == 0) throw std::domain_error("sigma: n must be positive");
  Integer total = 0;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    total += ipow(d, k);
    unsigned long e = n / d;
    if (e != d) total += ipow(e, k);
  }
  return total;
}

std::vector<Integer> sigma1_table(unsigned long nmax) {
  std::vector<Integer> t(nmax + 1, Integer(0));
  for (unsigned long d = 1; d <= nmax; ++d)
    for (unsigned long m = d; m <= nmax; m += d) t[m] += d;
  return t;
}

QZSeries eisenstein(int k, const Rational& order) {
  if (k < 2 || k % 2 != 0) throw std::domain_error("eisenstein: even weight >= 2");
  Rational factor = Rational(-2 * k) / bernoulli(static_cast<unsigned>(k));
  std::map<long, ZetaPoly> levels;
  levels[0][0] = 1;
  long limit = scaled_ceil(order, 1);
  for (long n = 1; n < limit; ++n)
    levels[n][0] = factor * Rational(sigma(static_cast<unsigned>(k - 1),
                                           static_cast<unsigned long>(n)));
  QZSeries s = QZSeries::assemble(1, order, std::move(levels));
  s.set_weight(k);
  s.set_index(0);
  return s;
}

QZSeries euler_product(const Rational& order) {
  // prod (1 - q^n) = sum_{k in Z} (-1)^k q^{k(3k-1)/2}
  std::map<long, ZetaPoly> levels;
  long limit = scaled_ceil(order, 1);
  for (long k = 0;; ++k) {
    long e1 = k * (3 * k - 1) / 2;   // k >= 0
    long e2 = k * (3 * k + 1) / 2;   // represents -k
    if (e1 >= limit && e2 >= limit) break;
    Rational sign((k % 2 == 0) ? 1 : -1);
    if (e1 < limit) levels[e1][0] += sign;
    if (k > 0 && e2 < limit) levels[e2][0] += sign;
  }
  return QZSeries::assemble(1, order, std::move(levels));
}

QZSeries eta_pow(int s, const Rational& order) {
  if (s <= 0 || s % 2 != 0) throw std::domain_error("eta_pow: s must be a positive even integer");
  // Smallest allowed grid carrying s/24.
  int grid = 0;
  for (int d : kAllowedGrids) {
    if ((static_cast<long>(s) * d) % 24 == 0) {
      grid = d;
      break;
    }
  }
  Rational prefix_exp = make_rational(s, 24);
  QZSeries p = euler_product(order - prefix_exp);
  QZSeries result = mul(QZSeries::monomial(prefix_exp, 0, grid),
                        pow(p, static_cast<unsigned>(s)));
  result = canonical_grid(result);
  result.set_weight(s / 2);
  result.set_index(0);
  return result;
}

QZSeries delta(const Rational& order) {
  QZSeries d = mul(QZSeries::monomial(1, 0, 1), pow(euler_product(order - 1), 24));
  d.set_weight(12);
  d.set_index(0);
  return d;
}

QZSeries theta1_sq(const Rational& order) {
  // theta1 = -i sum_{a in Z} (-1)^a q^{(2a+1)^2/8} zeta^{(2a+1)/2}; squaring
  // gives integer zeta-exponents and q-exponents on grid 4 (keys 2*(4e)).
  std::map<long, ZetaPoly> levels;
  long limit = scaled_ceil(order, 4);  // key = (sa^2 + sb^2)/2 < limit
  auto half_index = [](long s) { return (s - 1) / 2; };  // 2a+1 = s -> a, exact
  for (long wa = 1; wa * wa < 2 * limit; wa += 2) {
    for (long sa : {wa, -wa}) {
      for (long wb = 1; sa * sa + wb * wb < 2 * limit; wb += 2) {
        for (long sb : {wb, -wb}) {
          long key = (sa * sa + sb * sb) / 2;
          long r = (sa + sb) / 2;
          long ab = half_index(sa) + half_index(sb);
          levels[key][r] += Rational((ab % 2 == 0) ? -1 : 1);
        }
      }
    }
  }
  QZSeries s = QZSeries::assemble(4, order, std::move(levels));
  s.set_weight(1);
  s.set_index(1);
  return s;
}

FormWithSingular jn_deformed(int n, const Rational& order) {
  if (n < 1) throw std::domain_error("jn_deformed: n >= 1");
  std::map<long, ZetaPoly> levels;
  Rational bn = bernoulli(static_cast<unsigned>(n));
  if (bn != 0) levels[0][0] = bn;
  long limit = scaled_ceil(order, 1);
  Rational parity((n % 2 == 0) ? 1 : -1);
  for (long k = 1; k < limit; ++k) {
    for (long r = 1; k * r < limit; ++r) {
      Rational w = Rational(-n) * Rational(ipow(static_cast<unsigned long>(r),
                                                static_cast<unsigned>(n - 1)));
      levels[k * r][k] += w;
      levels[k * r][-k] += w * parity;
    }
  }
  FormWithSingular f;
  f.regular = QZSeries::assemble(1, order, std::move(levels));
  f.regular.set_weight(n);
  f.regular.set_index(0);
  if (n == 1) {
    SingularFactor s;
    s.numer[1] = -1;  // zeta/(zeta - 1) = -zeta/(1 - zeta)
    s.pole_order = 1;
    f.singular = s;
  }
  return f;
}

FormWithSingular weierstrass_p(const Rational& order) {
  std::map<long, ZetaPoly> levels;
  levels[0][0] = make_rational(1, 12);
  long limit = scaled_ceil(order, 1);
  for (long d = 1; d < limit; ++d) {
    for (long n = d; n < limit; n += d) {
      levels[n][d] += d;
      levels[n][-d] += d;
      levels[n][0] -= 2 * d;
    }
  }
  FormWithSingular f;
  f.regular = QZSeries::assemble(1, order, std::move(levels));
  f.regular.set_weight(2);
  f.regular.set_index(0);
  SingularFactor s;
  s.numer[1] = 1;  // zeta/(1 - zeta)^2
  s.pole_order = 2;
  f.singular = s;
  return f;
}

QZSeries phi_m2_1(const Rational& order) {
  // -theta1^2 / eta^6.  Both factors start at q^{1/4}; the inverse of
  // eta^6 is exact below (order + 1/4) - 1/2, and the product below order.
  Rational margin = order + make_rational(1, 4);
  QZSeries th = theta1_sq(margin);
  QZSeries inv_eta6 = inverse(eta_pow(6, margin));
  QZSeries result = canonical_grid(neg(mul(th, inv_eta6)));
  result.set_weight(-2);
  result.set_index(1);
  return result;
}

QZSeries phi_0_1(const Rational& order) {
  FormWithSingular wp = weierstrass_p(order);
  QZSeries phi = phi_m2_1(order);
  QZSeries result = scale(12, add(mul(wp.regular, phi), mul_singular(phi, *wp.singular)));
  result.set_weight(0);
  result.set_index(1);
  return result;
}

QZSeries jacobi_eisenstein_index1(int k, const Rational& order) {
  QZSeries phi0 = phi_0_1(order);
  QZSeries phim2 = phi_m2_1(order);
  QZSeries result;
  if (k == 4) {
    result = scale(make_rational(1, 12),
                   sub(mul(eisenstein(4, order), phi0), mul(eisenstein(6, order), phim2)));
  } else if (k == 6) {
    result = scale(make_rational(1, 12),
                   sub(mul(eisenstein(6, order), phi0),
                       mul(pow(eisenstein(4, order), 2), phim2)));
  } else {
    throw std::domain_error("jacobi_eisenstein_index1: weight must be 4 or 6");
  }
  result.set_weight(k);
  result.set_index(1);
  return result;
}

QZSeries e2_1(const Rational& order) {
  FormWithSingular wp = weierstrass_p(order);
  QZSeries phim2 = phi_m2_1(order);
  QZSeries e2 = eisenstein(2, order);
  QZSeries e4 = eisenstein(4, order);
  QZSeries regular_part =
      mul(phim2, sub(mul(e2, wp.regular), scale(make_rational(1, 12), e4)));
  QZSeries singular_part = mul_singular(mul(e2, phim2), *wp.singular);
  QZSeries result = add(regular_part, singular_part);
  result.set_weight(2);
  result.set_index(1);
  return result;
}

QZSeries phi_10_1(const Rational& order) {
  QZSeries result = scale(
      make_rational(1, 144),
      sub(mul(eisenstein(6, order), jacobi_eisenstein_index1(4, order)),
          mul(eisenstein(4, order), jacobi_eisenstein_index1(6, order))));
  result.set_weight(10);
  result.set_index(1);
  return result;
}

QZSeries phi_12_1(const Rational& order) {
  QZSeries result = scale(
      make_rational(1, 144),
      sub(mul(pow(eisenstein(4, order), 2), jacobi_eisenstein_index1(4, order)),
          mul(eisenstein(6, order), jacobi_eisenstein_index1(6, order))));
  result.set_weight(12);
  result.set_index(1);
  return result;
}

const std::vector<FormCatalogEntry>& catalog() {
  static const std::vector<FormCatalogEntry> entries = [] {
    std::vector<FormCatalogEntry> v;
    v.push_back({"E2", 2, 0, FormKind::quasi, [](const Rational& o) { return eisenstein(2, o); }});
    v.push_back({"E4", 4, 0, FormKind::modular, [](const Rational& o) { return eisenstein(4, o); }});
    v.push_back({"E6", 6, 0, FormKind::modular, [](const Rational& o) { return eisenstein(6, o); }});
    v.push_back({"Delta", 12, 0, FormKind::modular, [](const Rational& o) { return delta(o); }});
    v.push_back({"EtaPow6", 3, 0, FormKind::modular, [](const Rational& o) { return eta_pow(6, o); }});
    v.push_back({"Theta1Sq", 1, 1, FormKind::jacobi, [](const Rational& o) { return theta1_sq(o); }});
    v.push_back({"J1regular", 1, 0, FormKind::kernel,
                 [](const Rational& o) { return jn_deformed(1, o).regular; }});
    for (int n = 2; n <= 8; ++n) {
      v.push_back({"J" + std::to_string(n), n, 0, FormKind::kernel,
                   [n](const Rational& o) { return jn_deformed(n, o).regular; }});
    }
    v.push_back({"WpFourier", 2, 0, FormKind::kernel,
                 [](const Rational& o) { return weierstrass_p(o).regular; }});
    v.push_back({"PhiM2_1", -2, 1, FormKind::weak_jacobi, [](const Rational& o) { return phi_m2_1(o); }});
    v.push_back({"Phi0_1", 0, 1, FormKind::weak_jacobi, [](const Rational& o) { return phi_0_1(o); }});
    v.push_back({"E4_1", 4, 1, FormKind::jacobi,
                 [](const Rational& o) { return jacobi_eisenstein_index1(4, o); }});
    v.push_back({"E6_1", 6, 1, FormKind::jacobi,
                 [](const Rational& o) { return jacobi_eisenstein_index1(6, o); }});
    v.push_back({"E2_1", 2, 1, FormKind::quasi, [](const Rational& o) { return e2_1(o); }});
    v.push_back({"Phi10_1", 10, 1, FormKind::jacobi_cusp, [](const Rational& o) { return phi_10_1(o); }});
    v.push_back({"Phi12_1", 12, 1, FormKind::jacobi_cusp, [](const Rational& o) { return phi_12_1(o); }});
    return v;
  }();
  return entries;
}

const FormCatalogEntry* find_form(std::string_view name) {
  for (const auto& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

QZSeries build_form(const std::string& name, const Rational& order) {
  const FormCatalogEntry* entry = find_form(name);
  if (!entry) throw std::invalid_argument("unknown form name: " + name);

  static std::map<std::pair<std::string, std::string>, QZSeries> cache;
  static std::shared_mutex mu;
  const std::pair<std::string, std::string> key{name, rational_to_string(order)};
  {
    std::shared_lock lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  QZSeries s = entry->build(order);
  std::unique_lock lock(mu);
  return cache.emplace(key, std::move(s)).first->second;
}

// --- Weierstrass cross-check ----------------------------------------------

namespace {

using Poly = std::vector<Rational>;  // univariate, index = power of w

Poly poly_mul(const Poly& a, const Poly& b, std::size_t n) {
  Poly out(n, Rational(0));
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly poly_inverse(const Poly& a, std::size_t n) {
  Poly out(n, Rational(0));
  out[0] = Rational(1) / a[0];
  for (std::size_t t = 1; t < n; ++t) {
    Rational acc = 0;
    for (std::size_t s = 1; s <= t && s < a.size(); ++s) acc += a[s] * out[t - s];
    out[t] = -acc / a[0];
  }
  return out;
}

}  // namespace

WpCrossCheckReport cross_check_wp_z_expansion(int z_order, int q_order) {
  WpCrossCheckReport rep;
  const std::size_t n = static_cast<std::size_t>(z_order) + 3;

  // Pole part: zeta/(1-zeta)^2 with zeta = e^w equals w^{-2} e^w u(w)^{-2}
  // where u(w) = sum_j w^j/(j+1)!.
  Poly u(n), expw(n);
  for (std::size_t j = 0; j < n; ++j) {
    u[j] = Rational(1) / Rational(factorial(j + 1));
    expw[j] = Rational(1) / Rational(factorial(j));
  }
  Poly a = poly_mul(expw, poly_inverse(poly_mul(u, u, n), n), n);  // A_j

  FormWithSingular wp = weierstrass_p(Rational(q_order));

  auto fail = [&rep](int power, long level, std::string detail) {
    rep.ok = false;
    rep.first_bad_power = power;
    rep.first_bad_level = level;
    rep.detail = std::move(detail);
  };

  if (a[0] != 1) {
    fail(-2, 0, "pole normalization");
    return rep;
  }
  if (a[1] != 0) {
    fail(-1, 0, "odd pole coefficient");
    return rep;
  }

  // Coefficient of w^j on the Fourier side, as a map q-level -> value.
  for (int j = 0; j <= z_order; ++j) {
    std::map<long, Rational> fourier;
    if (a[static_cast<std::size_t>(j) + 2] != 0) fourier[0] = a[static_cast<std::size_t>(j) + 2];
    if (j == 0) fourier[0] += make_rational(1, 12);
    Rational jfact(factorial(static_cast<unsigned long>(j)));
    for (const auto& [lev, p] : wp.regular.levels()) {
      if (lev == 0) continue;  // handled by the constant above (level 0 is 1/12)
      Rational acc = 0;
      for (const auto& [r, c] : p) {
        Integer rp;
        mpz_pow_ui(rp.get_mpz_t(), Integer(r).get_mpz_t(), static_cast<unsigned long>(j));
        acc += c * Rational(rp);
      }
      if (acc != 0) fourier[lev] = acc / jfact;
    }

    // Classical side: only even powers j = 2t >= 2 are present, with
    // coefficient -(2t+1) B_{2t+2}/(2t+2)! E_{2t+2}(q).
    std::map<long, Rational> classical;
    if (j >= 2 && j % 2 == 0) {
      unsigned t2 = static_cast<unsigned>(j) + 2;
      Rational c = -Rational(j + 1) * bernoulli(t2) / Rational(factorial(t2));
      QZSeries ek = eisenstein(static_cast<int>(t2), Rational(q_order));
      for (const auto& [lev, p] : ek.levels()) {
        Rational v = p.count(0) ? p.at(0) : Rational(0);
        if (c * v != 0) classical[lev] = c * v;
      }
    }

    for (long lev = 0; lev < q_order; ++lev) {
      Rational lhs = fourier.count(lev) ? fourier[lev] : Rational(0);
      Rational rhs = classical.count(lev) ? classical[lev] : Rational(0);
      if (lhs != rhs) {
        fail(j, lev,
             "w^" + std::to_string(j) + " q^" + std::to_string(lev) + ": " +
                 rational_to_string(lhs) + " != " + rational_to_string(rhs));
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace jf::forms
