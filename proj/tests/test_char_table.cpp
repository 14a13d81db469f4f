#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "reality/char_table.hpp"
#include "reality/class_table.hpp"
#include "reality/errors.hpp"
#include "reality/families.hpp"
#include "reality/modp.hpp"

using namespace reality;

namespace {

struct Prepared {
  GroupPtr g;
  ClassTable t;
  ModPCharacterTable table;
};

Prepared prepare(GroupPtr g) {
  Prepared p;
  p.g = std::move(g);
  p.t = conjugacy_classes(*p.g);
  p.table = compute_character_table(*p.g, p.t);
  return p;
}

std::vector<std::uint64_t> degrees(const ModPCharacterTable& table) {
  std::vector<std::uint64_t> d;
  for (const auto& row : table.rows) d.push_back(row.degree);
  return d;
}

const CharacterRow& trivial_row(const ModPCharacterTable& table) {
  for (const auto& row : table.rows) {
    if (row.degree != 1) continue;
    if (std::all_of(row.values.begin(), row.values.end(),
                    [](std::uint64_t v) { return v == 1; }))
      return row;
  }
  throw std::logic_error("no trivial character row");
}

}  // namespace

TEST_CASE("structure constants of S3") {
  const GroupPtr g = make_symmetric(3);
  const ClassTable t = conjugacy_classes(*g);
  const StructureConstants s = structure_constants(*g, t);
  REQUIRE(s.class_count == 3);
  // class order: identity, 3-cycles (size 2), transpositions (size 3)

  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = 0; k < 3; ++k) CHECK(s.at(0, j, k) == (j == k ? 1 : 0));

  CHECK(s.at(2, 2, 0) == 3);  // x*y = e with x, y transpositions
  CHECK(s.at(2, 2, 1) == 3);  // three factorizations of each 3-cycle
  CHECK(s.at(2, 2, 2) == 0);
  CHECK(s.at(1, 1, 0) == 2);
  CHECK(s.at(1, 1, 1) == 1);
  CHECK(s.at(1, 2, 2) == 2);

  // symmetry in the first two slots, and row sums |C_i| * |C_j|
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      std::uint64_t total = 0;
      for (std::size_t k = 0; k < 3; ++k) {
        CHECK(s.at(i, j, k) == s.at(j, i, k));
        total += s.at(i, j, k) * t.sizes[k];
      }
      CHECK(total == t.sizes[i] * t.sizes[j]);
    }
}

TEST_CASE("structure constant sweep budget") {
  const GroupPtr g = make_symmetric(4);
  const ClassTable t = conjugacy_classes(*g);
  CHECK_THROWS_AS((void)structure_constants(*g, t, SweepBudget{10}), BudgetExceeded);
}

TEST_CASE("modulus choice") {
  const auto prime_for = [](const GroupPtr& g) {
    return choose_prime(*g, conjugacy_classes(*g));
  };
  CHECK(prime_for(make_cyclic(1)) == 3);
  CHECK(prime_for(make_symmetric(3)) == 7);
  CHECK(prime_for(make_special_linear(2, 3)) == 13);
  CHECK(prime_for(make_cyclic(128)) == 257);
  CHECK(prime_for(make_special_linear(2, 9)) == 241);

  for (const GroupPtr g : {make_quaternion8(), make_symmetric(5), make_dihedral(7)}) {
    const std::uint64_t p = prime_for(g);
    CHECK(modp::is_prime(p));
    CHECK(p % g->exponent() == 1);
    CHECK(p * p > 4 * g->order());
  }
}

TEST_CASE("degrees of the reference tables") {
  CHECK(degrees(prepare(make_cyclic(2)).table) == std::vector<std::uint64_t>{1, 1});
  CHECK(degrees(prepare(make_symmetric(3)).table) == std::vector<std::uint64_t>{1, 1, 2});
  CHECK(degrees(prepare(make_quaternion8()).table) == std::vector<std::uint64_t>{1, 1, 1, 1, 2});
  CHECK(degrees(prepare(make_special_linear(2, 3)).table) ==
        std::vector<std::uint64_t>{1, 1, 1, 2, 2, 2, 3});
  CHECK(degrees(prepare(make_alternating(5)).table) == std::vector<std::uint64_t>{1, 3, 3, 4, 5});
}

TEST_CASE("table level invariants") {
  for (const GroupPtr g : {make_symmetric(4), make_quaternion8(), make_dihedral(6),
                           make_special_linear(2, 3), make_cyclic(12), make_alternating(5)}) {
    const Prepared p = prepare(g);
    std::uint64_t degree_square_sum = 0;
    std::uint64_t real_rows = 0;
    for (const auto& row : p.table.rows) {
      degree_square_sum += row.degree * row.degree;
      CHECK(g->order() % row.degree == 0);
      CHECK(row.values[0] % p.table.prime == row.degree % p.table.prime);
      CHECK((row.indicator == -1 || row.indicator == 0 || row.indicator == 1));
      CHECK((row.indicator != 0) == row.is_real);
      CHECK(row.is_real == character_is_real(row, p.t));
      CHECK(row.is_rational == character_is_rational(row, p.t));
      if (row.is_rational) CHECK(row.is_real);
      if (row.is_real) ++real_rows;
    }
    CHECK(degree_square_sum == g->order());
    CHECK(p.table.rows.size() == p.t.count());
    CHECK(std::is_sorted(p.table.rows.begin(), p.table.rows.end(),
                         [](const CharacterRow& a, const CharacterRow& b) {
                           return a.degree < b.degree;
                         }));
    const RealityProfile profile = reality_profile(*g, p.t);
    CHECK(real_rows == profile.real_classes);

    // indicator degree sum counts the solutions of x^2 = e
    std::int64_t weighted = 0;
    for (const auto& row : p.table.rows) weighted += std::int64_t(row.indicator) * std::int64_t(row.degree);
    CHECK(weighted == std::int64_t(involution_solution_count(*g)));
  }
}

TEST_CASE("indicators of the reference tables") {
  const Prepared triv = prepare(make_cyclic(1));
  REQUIRE(triv.table.rows.size() == 1);
  CHECK(triv.table.rows[0].indicator == 1);

  const Prepared q8 = prepare(make_quaternion8());
  CHECK(trivial_row(q8.table).indicator == 1);
  CHECK(q8.table.rows.back().degree == 2);
  CHECK(q8.table.rows.back().indicator == -1);

  const Prepared a7 = prepare(make_alternating(7));
  const std::size_t zero_rows =
      std::count_if(a7.table.rows.begin(), a7.table.rows.end(),
                    [](const CharacterRow& r) { return r.indicator == 0; });
  CHECK(zero_rows == 2);
}

TEST_CASE("indicator profiles of the reference groups") {
  const auto profile = [](GroupPtr g) { return indicator_profile(prepare(std::move(g)).table); };

  const IndicatorProfile sl25 = profile(make_special_linear(2, 5));
  CHECK(sl25.orthogonal == 5);
  CHECK(sl25.symplectic == 4);
  CHECK(sl25.unitary == 0);

  const IndicatorProfile s5 = profile(make_symmetric(5));
  CHECK(s5.orthogonal == 7);
  CHECK(s5.symplectic == 0);
  CHECK(s5.unitary == 0);

  const IndicatorProfile sl23 = profile(make_special_linear(2, 3));
  CHECK(sl23.orthogonal == 2);
  CHECK(sl23.symplectic == 1);
  CHECK(sl23.unitary == 4);
}

TEST_CASE("abelian groups never carry a symplectic character") {
  for (const unsigned n : {3u, 4u, 8u, 12u, 30u}) {
    const Prepared p = prepare(make_cyclic(n));
    for (const auto& row : p.table.rows) {
      CHECK(row.degree == 1);
      CHECK(row.indicator != -1);
    }
  }
  const Prepared e8 = prepare(
      direct_product(direct_product(make_cyclic(2), make_cyclic(2)), make_cyclic(2)));
  for (const auto& row : e8.table.rows) CHECK(row.indicator == 1);
}

TEST_CASE("rationality of characters") {
  const Prepared s4 = prepare(make_symmetric(4));
  for (const auto& row : s4.table.rows) CHECK(row.is_rational);

  const Prepared c3 = prepare(make_cyclic(3));
  const std::size_t rational_rows =
      std::count_if(c3.table.rows.begin(), c3.table.rows.end(),
                    [](const CharacterRow& r) { return r.is_rational; });
  CHECK(rational_rows == 1);

  const Prepared q8 = prepare(make_quaternion8());
  for (const auto& row : q8.table.rows) CHECK(row.is_rational);
}

TEST_CASE("group flags on contrasting examples") {
  const auto flags = [](GroupPtr g) {
    Prepared p = prepare(std::move(g));
    return group_flags(*p.g, p.t, reality_profile(*p.g, p.t), p.table);
  };

  const GroupFlags s6 = flags(make_symmetric(6));
  CHECK(s6.ambivalent);
  CHECK(s6.strongly_real_group);
  CHECK(s6.totally_orthogonal);
  CHECK(s6.rational_group);
  CHECK(s6.generated_by_involutions);
  CHECK(s6.generated_by_2elements);
  CHECK_FALSE(s6.sylow2_abelian);

  // both of order 8, opposite reality behavior
  const GroupFlags d4 = flags(make_dihedral(4));
  CHECK(d4.strongly_real_group);
  CHECK(d4.totally_orthogonal);
  CHECK_FALSE(d4.sylow2_abelian);

  const GroupFlags q8 = flags(make_quaternion8());
  CHECK(q8.ambivalent);
  CHECK_FALSE(q8.strongly_real_group);
  CHECK_FALSE(q8.totally_orthogonal);
  CHECK(q8.rational_group);

  const GroupFlags c3 = flags(make_cyclic(3));
  CHECK_FALSE(c3.ambivalent);
  CHECK_FALSE(c3.rational_group);
  CHECK(c3.sylow2_abelian);
}
