#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "reality/char_table.hpp"
#include "reality/class_table.hpp"
#include "reality/counting.hpp"
#include "reality/errors.hpp"
#include "reality/families.hpp"

using namespace reality;

TEST_CASE("partition generation") {
  CHECK(partitions(1).size() == 1);
  CHECK(partitions(5).size() == 7);
  CHECK(partitions(7).size() == 15);
  CHECK(partitions(10).size() == 42);

  const auto p7 = partitions(7);
  CHECK(p7.front().parts == std::vector<unsigned>{7});
  CHECK(p7.back().parts == std::vector<unsigned>(7, 1));
  for (std::size_t i = 0; i < p7.size(); ++i) {
    CHECK(p7[i].sum() == 7);
    CHECK(std::is_sorted(p7[i].parts.rbegin(), p7[i].parts.rend()));
    if (i) CHECK(p7[i].parts < p7[i - 1].parts);
  }
  CHECK_THROWS_AS((void)partitions(65), BudgetExceeded);
}

TEST_CASE("general linear class counts") {
  for (const unsigned q : {2u, 3u, 4u, 5u, 7u, 9u}) CHECK(gl_class_count(1, q) == q - 1);
  CHECK(gl_class_count(2, 2) == 3);
  CHECK(gl_class_count(2, 3) == 8);
  CHECK(gl_class_count(2, 4) == 15);
  CHECK(gl_class_count(2, 5) == 24);
  CHECK(gl_class_count(3, 2) == 6);

  // full pipeline as the oracle
  for (const unsigned q : {2u, 3u, 4u, 5u}) {
    const GroupPtr g = make_general_linear(2, q);
    CHECK(gl_class_count(2, q) == conjugacy_classes(*g).count());
  }

  CHECK_THROWS_AS((void)gl_class_count(0, 5), BudgetExceeded);
  CHECK_THROWS_AS((void)gl_class_count(9, 2), BudgetExceeded);
}

TEST_CASE("inversion-closed polynomial counts") {
  for (const unsigned q : {2u, 3u, 4u, 5u, 9u}) CHECK(self_reciprocal_count(q, 0) == 1);
  CHECK(self_reciprocal_count(2, 1) == 1);
  CHECK(self_reciprocal_count(3, 1) == 2);
  CHECK(self_reciprocal_count(4, 1) == 1);
  CHECK(self_reciprocal_count(5, 1) == 2);
  CHECK(self_reciprocal_count(2, 2) == 2);
  CHECK(self_reciprocal_count(3, 2) == 4);
  CHECK(self_reciprocal_count(4, 2) == 4);
  CHECK(self_reciprocal_count(5, 2) == 6);

  // degree-1 case has a two-line closed form: roots fixed by inversion
  for (const unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u})
    CHECK(self_reciprocal_count(q, 1) == (q % 2 == 0 ? 1 : 2));

  CHECK_THROWS_AS((void)self_reciprocal_count(2, 9), BudgetExceeded);
  CHECK_THROWS_AS((void)self_reciprocal_count(81, 5), BudgetExceeded);
}

TEST_CASE("general linear real class counts") {
  CHECK(gl_real_class_count(1, 3) == 2);
  CHECK(gl_real_class_count(2, 2) == 3);
  CHECK(gl_real_class_count(2, 3) == 6);
  CHECK(gl_real_class_count(2, 4) == 5);
  CHECK(gl_real_class_count(2, 5) == 8);

  for (const unsigned q : {2u, 3u, 4u, 5u}) {
    const GroupPtr g = make_general_linear(2, q);
    const RealityProfile p = reality_profile(*g, conjugacy_classes(*g));
    CHECK(gl_real_class_count(2, q) == p.real_classes);
    CHECK(p.real_classes == p.strongly_real_classes);
  }
  const GroupPtr g13 = make_general_linear(1, 3);
  CHECK(gl_real_class_count(1, 3) == reality_profile(*g13, conjugacy_classes(*g13)).real_classes);
}

TEST_CASE("alternating group partition classification") {
  const AnPartitionReport seven = an_partition_report(Partition{{7}});
  CHECK(seven.in_an);
  CHECK(seven.splits);
  CHECK(seven.nonreal);

  const AnPartitionReport r531 = an_partition_report(Partition{{5, 3, 1}});
  CHECK(r531.in_an);
  CHECK(r531.splits);
  CHECK(r531.nonreal);

  const AnPartitionReport nine = an_partition_report(Partition{{9}});
  CHECK(nine.splits);
  CHECK_FALSE(nine.nonreal);  // (9-1)/2 is even

  CHECK_FALSE(an_partition_report(Partition{{5, 1, 1}}).splits);  // repeated part
  CHECK_FALSE(an_partition_report(Partition{{4, 2}}).splits);     // even parts
  CHECK_FALSE(an_partition_report(Partition{{2, 1}}).in_an);
  CHECK_FALSE(an_partition_report(Partition{{1}}).splits);  // too small to split
}

TEST_CASE("alternating group class counts against the pipeline") {
  CHECK(an_counts(5).total == 5);
  CHECK(an_counts(5).real == 5);
  CHECK(an_counts(6).total == 7);
  CHECK(an_counts(6).real == 7);
  CHECK(an_counts(7).total == 9);
  CHECK(an_counts(7).real == 7);
  CHECK(an_counts(14).total == 72);
  CHECK(an_counts(14).real == 72);

  for (unsigned n = 3; n <= 9; ++n) {
    const GroupPtr g = make_alternating(n);
    const RealityProfile p = reality_profile(*g, conjugacy_classes(*g));
    CHECK(an_counts(n).total == p.total_classes);
    CHECK(an_counts(n).real == p.real_classes);
  }
  CHECK_THROWS_AS((void)an_counts(65), BudgetExceeded);
}

TEST_CASE("ambivalent alternating groups") {
  std::set<unsigned> ambivalent;
  for (unsigned n = 1; n <= 40; ++n)
    if (an_is_ambivalent(n)) ambivalent.insert(n);
  CHECK(ambivalent == std::set<unsigned>{1, 2, 5, 6, 10, 14});
}

TEST_CASE("special linear closed-form profiles against the pipeline") {
  for (const unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const Sl2Profile want = sl2_expected_profile(q);
    const GroupPtr g = make_special_linear(2, q);
    const ClassTable t = conjugacy_classes(*g);
    const RealityProfile p = reality_profile(*g, t);
    CHECK(want.classes == p.total_classes);
    CHECK(want.real == p.real_classes);
    CHECK(want.strongly_real == p.strongly_real_classes);
    if (q % 2 == 1) CHECK(want.strongly_real == 2);

    const ModPCharacterTable table = compute_character_table(*g, t);
    const IndicatorProfile ip = indicator_profile(table);
    CHECK(want.has_symplectic == (ip.symplectic > 0));
    CHECK(want.ortho_ambivalent == (ip.orthogonal == table.rows.size()));
    CHECK(want.ortho_ambivalent == (q % 2 == 0));
  }
  CHECK_THROWS_AS((void)sl2_expected_profile(6), NotPrimePower);
  CHECK_THROWS_AS((void)sl2_expected_profile(1), NotPrimePower);
}

TEST_CASE("special linear orthogonality predicate") {
  CHECK(sln_all_real_orthogonal(3, 5));
  CHECK(sln_all_real_orthogonal(5, 9));
  CHECK(sln_all_real_orthogonal(4, 3));
  CHECK(sln_all_real_orthogonal(8, 5));
  CHECK(sln_all_real_orthogonal(2, 2));
  CHECK(sln_all_real_orthogonal(2, 4));
  CHECK_FALSE(sln_all_real_orthogonal(2, 3));
  CHECK_FALSE(sln_all_real_orthogonal(2, 5));
  CHECK_FALSE(sln_all_real_orthogonal(2, 9));
  CHECK(sln_all_real_orthogonal(6, 8));
  CHECK_FALSE(sln_all_real_orthogonal(6, 5));
  CHECK_FALSE(sln_all_real_orthogonal(6, 7));

  // agrees with the computed indicator profile at n = 2
  for (const unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const GroupPtr g = make_special_linear(2, q);
    const ClassTable t = conjugacy_classes(*g);
    const ModPCharacterTable table = compute_character_table(*g, t);
    const IndicatorProfile ip = indicator_profile(table);
    CHECK(sln_all_real_orthogonal(2, q) == (ip.orthogonal == table.rows.size()));
  }

  CHECK_THROWS_AS((void)sln_all_real_orthogonal(0, 5), UnknownFamily);
  CHECK_THROWS_AS((void)sln_all_real_orthogonal(2, 6), NotPrimePower);
}
