#include "reality/char_table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "reality/errors.hpp"
#include "reality/modp.hpp"

namespace reality {

namespace {

using modp::Mat;
using modp::Vec;
using u64 = std::uint64_t;

// Row-vector action of the i-th class matrix: the matrix has a[i][j][k] at
// row k, column j, so each stored (j, k, value) entry sends v[k] into w[j].
Vec apply_class_matrix(const Vec& v, const std::vector<StructureConstants::Entry>& entries,
                       std::size_t r, u64 p) {
  Vec w(r, 0);
  for (const auto& e : entries)
    w[e.j] = modp::add(w[e.j], modp::mul(v[e.k], e.value % p, p), p);
  return w;
}

struct Subspace {
  Mat basis;  // RREF rows of length r
  std::vector<std::size_t> pivots;
};

u64 isqrt_floor(u64 n) {
  u64 s = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (s > 0 && s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

}  // namespace

std::uint64_t StructureConstants::at(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& e : by_i[i])
    if (e.j == j && e.k == k) return e.value;
  return 0;
}

StructureConstants structure_constants(const FiniteGroup& g, const ClassTable& t,
                                       const SweepBudget& budget) {
  const std::size_t n = g.order();
  const std::size_t r = t.count();
  if (static_cast<std::uint64_t>(n) * r > budget.work)
    throw BudgetExceeded("structure constant sweep needs " + std::to_string(n) + " x " +
                         std::to_string(r) + " products, over the work budget of " +
                         std::to_string(budget.work));

  StructureConstants s;
  s.class_count = r;
  s.by_i.assign(r, {});

  std::vector<std::uint64_t> cell(r * r);
  for (std::size_t k = 0; k < r; ++k) {
    std::fill(cell.begin(), cell.end(), 0);
    const EIdx z = t.reps[k];
    for (EIdx x = 0; x < n; ++x) {
      const EIdx y = g.mult(g.inverse(x), z);
      ++cell[std::size_t(t.class_of[x]) * r + t.class_of[y]];
    }
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        if (const std::uint64_t v = cell[i * r + j])
          s.by_i[i].push_back({static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(k), v});
  }

  // Identity class acts as the identity matrix.
  for (const auto& e : s.by_i[0])
    if (e.j != e.k || e.value != 1)
      throw InternalError("identity class matrix is not the identity");

  // Mass balance: summing a[i][j][k] * |C_k| over k counts all of C_i x C_j.
  std::vector<std::uint64_t> mass(r * r, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (const auto& e : s.by_i[i]) mass[i * r + e.j] += e.value * t.sizes[e.k];
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (mass[i * r + j] != t.sizes[i] * t.sizes[j])
        throw InternalError("structure constant mass mismatch at classes " + std::to_string(i) +
                            ", " + std::to_string(j));

  // a[i][j][k] = a[j][i][k]: both count factorizations of the same element.
  for (std::size_t i = 0; i < r; ++i)
    for (const auto& e : s.by_i[i])
      if (s.at(e.j, i, e.k) != e.value)
        throw InternalError("structure constants are not symmetric in the first two classes");

  return s;
}

std::uint64_t choose_prime(const FiniteGroup& g, const ClassTable& t) {
  (void)t;
  const u64 n = g.order();
  const u64 e = g.exponent();
  const u64 low = 2 * (isqrt_floor(n) + (isqrt_floor(n) * isqrt_floor(n) < n ? 1 : 0));
  for (u64 p = e + 1;; p += e) {
    if (p > (1ull << 31))
      throw SearchExhausted("no admissible prime congruent to 1 mod " + std::to_string(e) +
                            " below 2^31");
    if (p <= low) continue;
    if (modp::is_prime(p)) return p;
  }
}

ModPCharacterTable dixon_character_table(const FiniteGroup& g, const ClassTable& t,
                                         const StructureConstants& s, std::uint64_t p) {
  const std::size_t r = t.count();
  const u64 n = g.order();

  std::vector<Subspace> spaces;
  {
    Subspace full;
    full.basis = modp::identity_matrix(r);
    full.pivots.resize(r);
    std::iota(full.pivots.begin(), full.pivots.end(), std::size_t{0});
    spaces.push_back(std::move(full));
  }

  for (std::size_t i = 1; i < r; ++i) {
    bool any_big = false;
    for (const auto& sp : spaces) any_big |= sp.basis.size() > 1;
    if (!any_big) break;

    std::vector<Subspace> next;
    next.reserve(spaces.size());
    for (auto& sp : spaces) {
      const std::size_t b = sp.basis.size();
      if (b == 1) {
        next.push_back(std::move(sp));
        continue;
      }

      // Restriction of the class matrix to this subspace, in basis
      // coordinates. RREF pivots make the coordinates direct reads.
      Mat restr(b, Vec(b, 0));
      for (std::size_t row = 0; row < b; ++row) {
        const Vec w = apply_class_matrix(sp.basis[row], s.by_i[i], r, p);
        for (std::size_t col = 0; col < b; ++col) restr[row][col] = w[sp.pivots[col]];
        Vec back(r, 0);
        for (std::size_t col = 0; col < b; ++col) {
          if (restr[row][col] == 0) continue;
          for (std::size_t c = 0; c < r; ++c)
            back[c] = modp::add(back[c], modp::mul(restr[row][col], sp.basis[col][c], p), p);
        }
        if (back != w)
          throw SplitFailure("class matrix " + std::to_string(i) +
                             " does not preserve a candidate common eigenspace");
      }

      Mat restr_t(b, Vec(b, 0));
      for (std::size_t row = 0; row < b; ++row)
        for (std::size_t col = 0; col < b; ++col) restr_t[col][row] = restr[row][col];

      const Vec cp = modp::charpoly(restr, p);
      std::size_t split_total = 0;
      for (u64 lam = 0; lam < p; ++lam) {
        if (modp::poly_eval(cp, lam, p) != 0) continue;
        Mat shifted = restr_t;
        for (std::size_t d = 0; d < b; ++d) shifted[d][d] = modp::sub(shifted[d][d], lam, p);
        const std::vector<Vec> coords = modp::nullspace(shifted, p);
        if (coords.empty())
          throw SplitFailure("restriction eigenvalue " + std::to_string(lam) +
                             " has no eigenvector");

        Mat lifted;
        lifted.reserve(coords.size());
        for (const Vec& c : coords) {
          Vec rowv(r, 0);
          for (std::size_t col = 0; col < b; ++col) {
            if (c[col] == 0) continue;
            for (std::size_t cc = 0; cc < r; ++cc)
              rowv[cc] = modp::add(rowv[cc], modp::mul(c[col], sp.basis[col][cc], p), p);
          }
          lifted.push_back(std::move(rowv));
        }
        Subspace child;
        child.basis = std::move(lifted);
        child.pivots = modp::rref(child.basis, p);
        if (child.basis.size() != coords.size())
          throw SplitFailure("lifted eigenspace lost rank");
        split_total += child.basis.size();
        next.push_back(std::move(child));
      }
      if (split_total != b)
        throw SplitFailure("eigenspace dimensions under class matrix " + std::to_string(i) +
                           " sum to " + std::to_string(split_total) + ", expected " +
                           std::to_string(b));
    }
    spaces = std::move(next);
  }

  if (spaces.size() != r)
    throw SplitFailure("found " + std::to_string(spaces.size()) +
                       " common eigenspaces, expected " + std::to_string(r));
  for (const auto& sp : spaces)
    if (sp.basis.size() != 1)
      throw SplitFailure("a common eigenspace is not one-dimensional");

  // Normalize each line so the identity-class coordinate is 1; that pins
  // the central character itself.
  std::vector<Vec> omegas;
  omegas.reserve(r);
  for (const auto& sp : spaces) {
    Vec v = sp.basis[0];
    if (v[0] == 0) throw SplitFailure("central character vanishes on the identity class");
    const u64 scale = modp::inv(v[0], p);
    for (auto& x : v) x = modp::mul(x, scale, p);
    omegas.push_back(std::move(v));
  }

  // Every normalized line must be a genuine simultaneous eigenvector with
  // its own coordinates as eigenvalues.
  for (const Vec& om : omegas)
    for (std::size_t i = 1; i < r; ++i) {
      const Vec w = apply_class_matrix(om, s.by_i[i], r, p);
      for (std::size_t j = 0; j < r; ++j)
        if (w[j] != modp::mul(om[i], om[j], p))
          throw SplitFailure("central character fails the class algebra relation at classes " +
                             std::to_string(i) + ", " + std::to_string(j));
    }

  Vec inv_sizes(r);
  for (std::size_t k = 0; k < r; ++k) inv_sizes[k] = modp::inv(t.sizes[k] % p, p);
  const u64 n_mod = n % p;
  const u64 dmax = isqrt_floor(n);

  ModPCharacterTable table;
  table.prime = p;
  table.rows.reserve(r);
  u64 degree_square_sum = 0;
  for (Vec& om : omegas) {
    u64 norm = 0;
    for (std::size_t k = 0; k < r; ++k)
      norm = modp::add(norm, modp::mul(modp::mul(om[k], om[t.inverse_map[k]], p), inv_sizes[k], p),
                       p);
    if (norm == 0) throw DegreeNotFound("central character norm residue is zero");
    const u64 target = modp::mul(n_mod, modp::inv(norm, p), p);
    u64 degree = 0;
    for (u64 d = 1; d <= dmax; ++d)
      if (modp::mul(d % p, d % p, p) == target) {
        degree = d;
        break;
      }
    if (degree == 0)
      throw DegreeNotFound("no degree at most " + std::to_string(dmax) +
                           " has square residue " + std::to_string(target));
    degree_square_sum += degree * degree;

    CharacterRow row;
    row.degree = degree;
    row.values.resize(r);
    for (std::size_t k = 0; k < r; ++k)
      row.values[k] = modp::mul(degree % p, modp::mul(om[k], inv_sizes[k], p), p);
    row.omega = std::move(om);
    table.rows.push_back(std::move(row));
  }

  if (degree_square_sum != n)
    throw InternalError("character degree squares sum to " + std::to_string(degree_square_sum) +
                        ", expected the group order " + std::to_string(n));

  std::sort(table.rows.begin(), table.rows.end(), [](const CharacterRow& a, const CharacterRow& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.values < b.values;
  });
  return table;
}

int frobenius_schur_indicator(const CharacterRow& row, const ClassTable& t, std::uint64_t order,
                              std::uint64_t p) {
  u64 sum = 0;
  for (std::size_t k = 0; k < t.count(); ++k)
    sum = modp::add(sum, modp::mul(t.sizes[k] % p, row.values[t.square_map[k]], p), p);
  const u64 n_mod = order % p;
  if (sum == n_mod) return 1;
  if (sum == 0) return 0;
  if (sum == p - n_mod) return -1;
  throw IndicatorAmbiguous("squared-class sum residue " + std::to_string(sum) +
                           " matches no indicator for prime " + std::to_string(p));
}

bool character_is_real(const CharacterRow& row, const ClassTable& t) {
  for (std::size_t k = 0; k < t.count(); ++k)
    if (row.values[k] != row.values[t.inverse_map[k]]) return false;
  return true;
}

bool character_is_rational(const CharacterRow& row, const ClassTable& t) {
  for (const auto& pm : t.power_maps)
    for (std::size_t k = 0; k < t.count(); ++k)
      if (row.values[k] != row.values[pm[k]]) return false;
  return true;
}

ModPCharacterTable compute_character_table(const FiniteGroup& g, const ClassTable& t,
                                           const SweepBudget& budget) {
  const StructureConstants s = structure_constants(g, t, budget);
  const u64 p = choose_prime(g, t);
  ModPCharacterTable table = dixon_character_table(g, t, s, p);

  const std::size_t r = t.count();
  const u64 n = g.order();
  for (auto& row : table.rows) {
    row.is_real = character_is_real(row, t);
    row.is_rational = character_is_rational(row, t);
    row.indicator = frobenius_schur_indicator(row, t, n, p);
    // A character has nonzero indicator exactly when it is real-valued.
    if ((row.indicator != 0) != row.is_real)
      throw InternalError("indicator " + std::to_string(row.indicator) +
                          " disagrees with value-wise reality of a degree-" +
                          std::to_string(row.degree) + " character");
  }

  // Real classes and real characters are counted by the same permutation
  // trace, so the two tallies must agree.
  std::size_t real_classes = 0, real_chars = 0;
  for (std::size_t k = 0; k < r; ++k) real_classes += is_real_class(t, k) ? 1 : 0;
  for (const auto& row : table.rows) real_chars += row.is_real ? 1 : 0;
  if (real_classes != real_chars)
    throw InternalError("real class count " + std::to_string(real_classes) +
                        " differs from real character count " + std::to_string(real_chars));

  // The indicator-weighted degree sum counts solutions of g^2 = e.
  std::int64_t ind_sum = 0;
  for (const auto& row : table.rows)
    ind_sum += static_cast<std::int64_t>(row.indicator) * static_cast<std::int64_t>(row.degree);
  const auto involutions = static_cast<std::int64_t>(g.involution_solutions().size());
  if (ind_sum != involutions)
    throw InternalError("indicator degree sum " + std::to_string(ind_sum) +
                        " differs from the square-root-of-identity count " +
                        std::to_string(involutions));

  // Column orthogonality: summing values[j] * values[inverse j] over all
  // rows gives the centralizer order of class j.
  for (std::size_t j = 0; j < r; ++j) {
    u64 acc = 0;
    for (const auto& row : table.rows)
      acc = modp::add(acc, modp::mul(row.values[j], row.values[t.inverse_map[j]], p), p);
    if (acc != (n / t.sizes[j]) % p)
      throw InternalError("column orthogonality fails at class " + std::to_string(j));
  }

  return table;
}

IndicatorProfile indicator_profile(const ModPCharacterTable& table) {
  IndicatorProfile prof;
  for (const auto& row : table.rows) {
    if (row.indicator > 0)
      ++prof.orthogonal;
    else if (row.indicator < 0)
      ++prof.symplectic;
    else
      ++prof.unitary;
  }
  // Non-real characters pair off with their conjugates.
  if (prof.unitary % 2 != 0)
    throw InternalError("odd count of indicator-zero characters: " +
                        std::to_string(prof.unitary));
  return prof;
}

namespace {

// Greedy generation test: walk the pool in order, adjoin any element not in
// the running closure, and re-close. Each adjunction at least doubles the
// subgroup, so at most log2(|G|) closures run.
bool pool_generates(const FiniteGroup& g, const std::vector<EIdx>& pool) {
  const std::size_t n = g.order();
  std::vector<char> member(n, 0);
  member[g.identity()] = 1;
  std::size_t have = 1;
  std::vector<EIdx> gens;
  for (const EIdx cand : pool) {
    if (member[cand]) continue;
    gens.push_back(cand);
    const SubgroupHandle h = subgroup_closure(g, gens);
    if (h.order() == n) return true;
    std::fill(member.begin(), member.end(), 0);
    for (const EIdx x : h.elements) member[x] = 1;
    have = h.order();
  }
  return have == n;
}

}  // namespace

GroupFlags group_flags(const FiniteGroup& g, const ClassTable& t, const RealityProfile& profile,
                       const ModPCharacterTable& table) {
  GroupFlags f;
  f.ambivalent = profile.real_classes == profile.total_classes;
  f.strongly_real_group = profile.strongly_real_classes == profile.total_classes;
  f.rational_group = profile.rational_classes == profile.total_classes;

  f.totally_orthogonal = true;
  bool all_chars_rational = true;
  for (const auto& row : table.rows) {
    f.totally_orthogonal = f.totally_orthogonal && row.indicator == 1;
    all_chars_rational = all_chars_rational && row.is_rational;
  }
  // Rational classes and rational characters are simultaneous: both say the
  // Galois action on the table is trivial.
  if (all_chars_rational != f.rational_group)
    throw InternalError("rational class predicate disagrees with rational character predicate");

  f.sylow2_abelian = sylow_two(g).is_abelian();
  f.generated_by_involutions = pool_generates(g, g.involution_solutions());
  f.generated_by_2elements = pool_generates(g, g.two_power_elements());
  (void)t;
  return f;
}

}  // namespace reality
