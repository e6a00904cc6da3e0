#include "jf/spaces.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace jf::spaces {

long dim_modular(int k) {
  if (k < 0 || k % 2 != 0) return 0;
  if (k % 12 == 2) return k / 12;
  return k / 12 + 1;
}

long dim_cusp_modular(int k) {
  if (k < 4 || k % 2 != 0) return 0;
  return dim_modular(k) - 1;
}

long dim_jacobi_hol_index1(int k) { return dim_modular(k) + dim_cusp_modular(k + 2); }

long dim_jacobi_cusp_index1(int k) { return dim_cusp_modular(k) + dim_cusp_modular(k + 2); }

std::string BasisMonomial::name() const {
  std::string s;
  auto append = [&s](const char* base, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += base;
    if (e > 1) s += "^" + std::to_string(e);
  };
  append("E4", e4);
  append("E6", e6);
  append("Delta", delta);
  append("PhiM2_1", phi_m2);
  append("Phi0_1", phi_0);
  if (s.empty()) s = "1";
  return s;
}

std::vector<BasisMonomial> weak_monomials(int k, int m) {
  if (k % 2 != 0) throw std::domain_error("weak_monomials: weight must be even");
  if (m < 1) throw std::domain_error("weak_monomials: index must be >= 1");
  std::vector<BasisMonomial> out;
  for (int i = m; i >= 0; --i) {
    int target = k + 2 * i;  // modular weight carried by E4^a E6^b Delta^c
    if (target < 0) continue;
    for (int a = target / 4; a >= 0; --a) {
      for (int b = (target - 4 * a) / 6; b >= 0; --b) {
        int rem = target - 4 * a - 6 * b;
        if (rem % 12 != 0) continue;
        out.push_back({a, b, rem / 12, i, m - i});
      }
    }
  }
  return out;
}

namespace {

QZSeries build_monomial(const BasisMonomial& mono, const Rational& order) {
  QZSeries s = QZSeries::constant(1);
  if (mono.e4 > 0) s = mul(s, pow(forms::eisenstein(4, order), static_cast<unsigned>(mono.e4)));
  if (mono.e6 > 0) s = mul(s, pow(forms::eisenstein(6, order), static_cast<unsigned>(mono.e6)));
  if (mono.delta > 0) s = mul(s, pow(forms::delta(order), static_cast<unsigned>(mono.delta)));
  if (mono.phi_m2 > 0) s = mul(s, pow(forms::phi_m2_1(order), static_cast<unsigned>(mono.phi_m2)));
  if (mono.phi_0 > 0) s = mul(s, pow(forms::phi_0_1(order), static_cast<unsigned>(mono.phi_0)));
  return truncated(s, order);
}

// Shared position indexing: every stored coefficient of every series,
// rescaled to a common grid, position-sorted by (scaled exponent, r).
struct PositionTable {
  int grid = 1;
  std::vector<std::pair<long, long>> positions;
  std::map<std::pair<long, long>, std::size_t> slot;
};

PositionTable collect_positions(const std::vector<const QZSeries*>& series) {
  PositionTable t;
  for (const QZSeries* s : series) t.grid = std::lcm(t.grid, s->grid_denom());
  for (const QZSeries* s : series) {
    long factor = t.grid / s->grid_denom();
    for (const auto& [lev, p] : s->levels())
      for (const auto& [r, c] : p) t.slot.emplace(std::make_pair(lev * factor, r), 0);
  }
  for (auto& [pos, idx] : t.slot) {
    idx = t.positions.size();
    t.positions.push_back(pos);
  }
  return t;
}

linalg::Vector coefficient_column(const QZSeries& s, const PositionTable& t) {
  linalg::Vector v(t.positions.size(), Rational(0));
  long factor = t.grid / s.grid_denom();
  for (const auto& [lev, p] : s.levels())
    for (const auto& [r, c] : p) v[t.slot.at({lev * factor, r})] = c;
  return v;
}

}  // namespace

SpaceBasis weak_basis(int k, int m, const Rational& order) {
  std::vector<BasisMonomial> monos = weak_monomials(k, m);
  long expected = 0;
  for (int i = 0; i <= m; ++i) expected += dim_modular(k + 2 * i);

  std::vector<QZSeries> built;
  built.reserve(monos.size());
  for (const auto& mono : monos) built.push_back(build_monomial(mono, order));

  std::vector<const QZSeries*> ptrs;
  for (const auto& s : built) ptrs.push_back(&s);
  PositionTable table = collect_positions(ptrs);

  SpaceBasis basis;
  basis.weight = k;
  basis.index = m;
  basis.flavor = Flavor::weak;
  basis.order = order;

  linalg::Matrix kept;  // rows = coefficient vectors of kept elements
  for (std::size_t i = 0; i < built.size(); ++i) {
    linalg::Matrix trial = kept;
    trial.push_back(coefficient_column(built[i], table));
    if (linalg::rank(trial) == kept.size() + 1) {
      kept = std::move(trial);
      basis.names.push_back(monos[i].name());
      basis.elements.push_back(built[i]);
    }
  }
  if (static_cast<long>(basis.elements.size()) != expected)
    throw InsufficientOrderError("weak_basis: rank " + std::to_string(basis.elements.size()) +
                                 " below expected dimension " + std::to_string(expected) +
                                 " at this order");
  return basis;
}

SpaceBasis subspace(const SpaceBasis& basis, Flavor flavor) {
  if (flavor == Flavor::weak) return basis;

  std::vector<const QZSeries*> ptrs;
  for (const auto& s : basis.elements) ptrs.push_back(&s);
  PositionTable table = collect_positions(ptrs);

  // Constraint rows: coefficients outside the support cone must vanish.
  // Position (key, r) on grid G means q-exponent key/G, so the cone test
  // 4nm - r^2 (<|<=) 0 becomes 4*key*m (<|<=) r^2 * G.
  std::vector<std::size_t> bad_rows;
  for (std::size_t idx = 0; idx < table.positions.size(); ++idx) {
    auto [key, r] = table.positions[idx];
    long lhs_num = 4 * key * basis.index;
    long rhs_num = r * r * table.grid;
    bool violating = (flavor == Flavor::holomorphic) ? (lhs_num < rhs_num) : (lhs_num <= rhs_num);
    if (violating) bad_rows.push_back(idx);
  }

  linalg::Matrix columns;  // element-major coefficient rows
  for (const auto& s : basis.elements) columns.push_back(coefficient_column(s, table));

  linalg::Matrix constraint(bad_rows.size(), linalg::Vector(basis.elements.size(), Rational(0)));
  for (std::size_t i = 0; i < bad_rows.size(); ++i)
    for (std::size_t j = 0; j < basis.elements.size(); ++j)
      constraint[i][j] = columns[j][bad_rows[i]];

  std::vector<linalg::Vector> kernel = linalg::nullspace(constraint);

  // Canonicalize the kernel so the result does not depend on nullspace
  // internals: reduced echelon combos, then leading series coefficient 1.
  linalg::Matrix combos(kernel.begin(), kernel.end());
  linalg::rref(combos);

  SpaceBasis out;
  out.weight = basis.weight;
  out.index = basis.index;
  out.flavor = flavor;
  out.order = basis.order;
  for (const auto& combo : combos) {
    QZSeries s = QZSeries::zero(table.grid, basis.order);
    std::string name;
    for (std::size_t j = 0; j < combo.size(); ++j) {
      if (combo[j] == 0) continue;
      s = add(s, scale(combo[j], basis.elements[j]));
      if (name.empty())
        name += (combo[j] < 0) ? "-" : "";
      else
        name += (combo[j] < 0) ? " - " : " + ";
      Rational mag = abs(combo[j]);
      if (mag != 1) name += rational_to_string(mag) + "*";
      name += basis.names[j];
    }
    if (s.is_zero()) continue;
    Rational lead = s.levels().begin()->second.begin()->second;
    s = scale(Rational(1) / lead, s);
    s.set_weight(basis.weight);
    s.set_index(basis.index);
    out.elements.push_back(std::move(s));
    out.names.push_back("(" + name + ") / (" + rational_to_string(lead) + ")");
  }
  return out;
}

Membership membership_solve(const QZSeries& f, const std::vector<QZSeries>& basis,
                            const Rational& order) {
  if (f.order() && *f.order() < order)
    throw InsufficientOrderError("membership_solve: target series too short");
  for (const auto& b : basis)
    if (b.order() && *b.order() < order)
      throw InsufficientOrderError("membership_solve: basis element too short");

  QZSeries fcut = truncated(f, order);
  std::vector<QZSeries> bcut;
  for (const auto& b : basis) bcut.push_back(truncated(b, order));

  std::vector<const QZSeries*> ptrs{&fcut};
  for (const auto& b : bcut) ptrs.push_back(&b);
  PositionTable table = collect_positions(ptrs);

  linalg::Vector target = coefficient_column(fcut, table);
  linalg::Matrix columns;
  for (const auto& b : bcut) columns.push_back(coefficient_column(b, table));

  const std::size_t ncols = bcut.size();
  Membership result;

  // Square leading block: scan positions in order, keep rows that grow the
  // rank until the block is invertible.
  linalg::Matrix block;
  linalg::Vector rhs;
  for (std::size_t idx = 0; idx < table.positions.size() && block.size() < ncols; ++idx) {
    linalg::Vector row(ncols);
    for (std::size_t j = 0; j < ncols; ++j) row[j] = columns[j][idx];
    linalg::Matrix trial = block;
    trial.push_back(row);
    if (linalg::rank(trial) == block.size() + 1) {
      block = std::move(trial);
      rhs.push_back(target[idx]);
    }
  }
  if (block.size() < ncols)
    throw InsufficientOrderError("membership_solve: basis not independent at this order");

  std::optional<linalg::Vector> x = linalg::solve(block, rhs);
  if (!x) throw std::logic_error("membership_solve: invertible block failed to solve");

  // Verify every stored position against the candidate.
  for (std::size_t idx = 0; idx < table.positions.size(); ++idx) {
    Rational acc = 0;
    for (std::size_t j = 0; j < ncols; ++j)
      if ((*x)[j] != 0 && columns[j][idx] != 0) acc += (*x)[j] * columns[j][idx];
    if (acc != target[idx]) {
      auto [key, r] = table.positions[idx];
      result.in_span = false;
      result.witness = std::make_pair(make_rational(key, table.grid), r);
      return result;
    }
  }
  result.in_span = true;
  result.coefficients = *x;
  return result;
}

}  // namespace jf::spaces
