#include "reality/counting.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>

#include "reality/errors.hpp"
#include "reality/fq.hpp"

namespace reality {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr unsigned kPartitionBound = 64;
constexpr unsigned kMatrixRankBound = 8;
constexpr u64 kEnumerationBound = 50'000'000;

bool is_prime_power(unsigned q, unsigned* char_out = nullptr) {
  if (q < 2) return false;
  unsigned p = q;
  for (unsigned d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  unsigned m = q;
  while (m % p == 0) m /= p;
  if (m != 1) return false;
  if (char_out) *char_out = p;
  return true;
}

void require_prime_power(unsigned q) {
  if (!is_prime_power(q))
    throw NotPrimePower(std::to_string(q) + " is not a prime power");
}

template <typename Visit>
void walk_partitions(unsigned remaining, unsigned max_part, std::vector<unsigned>& acc,
                     Visit&& visit) {
  if (remaining == 0) {
    visit(acc);
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    acc.push_back(part);
    walk_partitions(remaining - part, part, acc, visit);
    acc.pop_back();
  }
}

u128 pow128(u64 base, unsigned e) {
  u128 r = 1;
  while (e--) r *= base;
  return r;
}

// Part value -> multiplicity, for a weakly decreasing parts vector.
std::map<unsigned, unsigned> multiplicities(const std::vector<unsigned>& parts) {
  std::map<unsigned, unsigned> m;
  for (const unsigned p : parts) ++m[p];
  return m;
}

unsigned two_adic_valuation(unsigned n) {
  unsigned v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  return v;
}

}  // namespace

unsigned Partition::sum() const {
  return std::accumulate(parts.begin(), parts.end(), 0u);
}

std::vector<Partition> partitions(unsigned n) {
  if (n > kPartitionBound)
    throw BudgetExceeded("partition enumeration is bounded at n <= " +
                         std::to_string(kPartitionBound));
  std::vector<Partition> out;
  std::vector<unsigned> acc;
  walk_partitions(n, n == 0 ? 1 : n, acc,
                  [&out](const std::vector<unsigned>& parts) { out.push_back({parts}); });
  return out;
}

std::uint64_t gl_class_count(unsigned n, unsigned q) {
  if (n == 0 || n > kMatrixRankBound)
    throw BudgetExceeded("general linear class counting is bounded at 1 <= n <= " +
                         std::to_string(kMatrixRankBound));
  require_prime_power(q);
  if (q > 4096) throw TooLarge("general linear class counting is bounded at q <= 4096");

  u128 total = 0;
  std::vector<unsigned> acc;
  walk_partitions(n, n, acc, [&](const std::vector<unsigned>& parts) {
    u128 prod = 1;
    for (const auto& [part, mult] : multiplicities(parts))
      prod *= pow128(q, mult) - pow128(q, mult - 1);
    total += prod;
  });
  if (total > u128(UINT64_MAX)) throw TooLarge("class count does not fit in 64 bits");
  return static_cast<u64>(total);
}

std::uint64_t self_reciprocal_count(unsigned q, unsigned m) {
  if (m > kMatrixRankBound)
    throw BudgetExceeded("self-reciprocal enumeration is bounded at degree <= " +
                         std::to_string(kMatrixRankBound));
  const FqField field(q);
  if (m == 0) return 1;  // the empty product: the constant polynomial 1
  if (pow128(q, m) > kEnumerationBound)
    throw BudgetExceeded("self-reciprocal enumeration needs q^m <= " +
                         std::to_string(kEnumerationBound));

  // Odometer over the non-leading coefficients a[0..m-1]; a[m] = 1.
  std::vector<unsigned> a(m + 1, 0);
  a[m] = 1;
  u64 count = 0;
  for (;;) {
    if (a[0] != 0) {
      bool ok = true;
      for (unsigned j = 0; j <= m; ++j)
        if (a[m - j] != field.mul(a[0], a[j])) {
          ok = false;
          break;
        }
      if (ok) ++count;
    }
    unsigned pos = 0;
    while (pos < m && a[pos] + 1 == q) a[pos++] = 0;
    if (pos == m) break;
    ++a[pos];
  }
  return count;
}

std::uint64_t gl_real_class_count(unsigned n, unsigned q) {
  if (n == 0 || n > kMatrixRankBound)
    throw BudgetExceeded("general linear real class counting is bounded at 1 <= n <= " +
                         std::to_string(kMatrixRankBound));
  require_prime_power(q);

  std::vector<u64> factor(n + 1, 0);
  std::vector<bool> have(n + 1, false);
  const auto factor_for = [&](unsigned m) {
    if (!have[m]) {
      factor[m] = self_reciprocal_count(q, m);
      have[m] = true;
    }
    return factor[m];
  };

  u64 total = 0;
  std::vector<unsigned> acc;
  walk_partitions(n, n, acc, [&](const std::vector<unsigned>& parts) {
    u64 prod = 1;
    for (const auto& [part, mult] : multiplicities(parts)) prod *= factor_for(mult);
    total += prod;
  });
  return total;
}

AnPartitionReport an_partition_report(const Partition& p) {
  const unsigned n = p.sum();
  const unsigned r = static_cast<unsigned>(p.count());
  AnPartitionReport rep;
  rep.in_an = (n - r) % 2 == 0;

  bool odd_distinct = n >= 2;  // below that there is no second coset to split over
  for (std::size_t i = 0; i < p.parts.size() && odd_distinct; ++i) {
    if (p.parts[i] % 2 == 0) odd_distinct = false;
    if (i + 1 < p.parts.size() && p.parts[i] == p.parts[i + 1]) odd_distinct = false;
  }
  rep.splits = odd_distinct;
  rep.nonreal = rep.splits && ((n - r) / 2) % 2 == 1;
  return rep;
}

AnCounts an_counts(unsigned n) {
  if (n > kPartitionBound)
    throw BudgetExceeded("alternating class counting is bounded at n <= " +
                         std::to_string(kPartitionBound));
  AnCounts out;
  u64 nonreal_split = 0;
  std::vector<unsigned> acc;
  walk_partitions(n, n == 0 ? 1 : n, acc, [&](const std::vector<unsigned>& parts) {
    const AnPartitionReport rep = an_partition_report({parts});
    if (rep.in_an) ++out.total;
    if (rep.splits) ++out.total;  // one extra class beyond the ambient one
    if (rep.nonreal) ++nonreal_split;
  });
  out.real = out.total - 2 * nonreal_split;
  return out;
}

bool an_is_ambivalent(unsigned n) {
  const AnCounts c = an_counts(n);
  return c.total == c.real;
}

Sl2Profile sl2_expected_profile(unsigned q) {
  unsigned p = 0;
  if (!is_prime_power(q, &p))
    throw NotPrimePower(std::to_string(q) + " is not a prime power");
  Sl2Profile out;
  if (p == 2) {
    out.classes = q + 1;
    out.real = q + 1;
    out.strongly_real = q + 1;
    out.has_symplectic = false;
    out.ortho_ambivalent = true;
  } else if (q % 4 == 1) {
    out.classes = q + 4;
    out.real = q + 4;
    out.strongly_real = 2;
    out.has_symplectic = true;
    out.ortho_ambivalent = false;
  } else {
    out.classes = q + 4;
    out.real = q;
    out.strongly_real = 2;
    out.has_symplectic = true;
    out.ortho_ambivalent = false;
  }
  return out;
}

bool sln_all_real_orthogonal(unsigned n, unsigned q) {
  if (n == 0) throw UnknownFamily("the special linear predicate needs n >= 1");
  require_prime_power(q);
  if (n % 2 == 1) return true;
  if (n % 4 == 0) return true;
  return two_adic_valuation(n) > two_adic_valuation(q - 1);
}

}  // namespace reality
