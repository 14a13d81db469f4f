#include "reality/plesken.hpp"

#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "reality/errors.hpp"

namespace reality {

namespace {

constexpr std::size_t kBruteforceBound = 5000;

// Sparse integer row, sorted by coordinate.
using SparseRow = std::vector<std::pair<std::uint32_t, long long>>;

void normalize(SparseRow& row) {
  long long g = 0;
  for (const auto& [c, v] : row) g = std::gcd(g, std::llabs(v));
  if (g > 1)
    for (auto& [c, v] : row) v /= g;
  if (!row.empty() && row.front().second < 0)
    for (auto& [c, v] : row) v = -v;
}

// a * lhs - b * rhs, merged by coordinate, zero entries dropped.
SparseRow combine(const SparseRow& lhs, long long a, const SparseRow& rhs, long long b) {
  SparseRow out;
  out.reserve(lhs.size() + rhs.size());
  std::size_t i = 0, j = 0;
  while (i < lhs.size() || j < rhs.size()) {
    if (j == rhs.size() || (i < lhs.size() && lhs[i].first < rhs[j].first)) {
      out.emplace_back(lhs[i].first, a * lhs[i].second);
      ++i;
    } else if (i == lhs.size() || rhs[j].first < lhs[i].first) {
      out.emplace_back(rhs[j].first, -b * rhs[j].second);
      ++j;
    } else {
      const long long v = a * lhs[i].second - b * rhs[j].second;
      if (v != 0) out.emplace_back(lhs[i].first, v);
      ++i;
      ++j;
    }
  }
  normalize(out);
  return out;
}

}  // namespace

std::uint64_t plesken_dim_bruteforce(const FiniteGroup& g) {
  if (g.order() > kBruteforceBound)
    throw BudgetExceeded("brute-force span rank is bounded at order " +
                         std::to_string(kBruteforceBound));
  std::map<std::uint32_t, SparseRow> pivots;  // leading coordinate -> row
  std::uint64_t rank = 0;
  for (EIdx x = 0; x < g.order(); ++x) {
    const EIdx ix = g.inverse(x);
    if (ix == x) continue;  // g - g^-1 vanishes
    SparseRow row;
    if (x < ix)
      row = {{x, 1}, {ix, -1}};
    else
      row = {{ix, -1}, {x, 1}};
    normalize(row);
    while (!row.empty()) {
      const auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        ++rank;
        pivots.emplace(row.front().first, std::move(row));
        break;
      }
      row = combine(row, it->second.front().second, it->second, row.front().second);
    }
  }
  return rank;
}

std::uint64_t plesken_dim_formula(const ModPCharacterTable& table) {
  std::uint64_t twice = 0;
  for (const auto& row : table.rows) {
    if (row.indicator > 0)
      twice += row.degree * (row.degree - 1);
    else if (row.indicator < 0)
      twice += row.degree * (row.degree + 1);
    else
      twice += row.degree * row.degree;
  }
  if (twice % 2 != 0) throw InternalError("doubled span dimension is odd");
  return twice / 2;
}

bool plesken_semisimple(const ModPCharacterTable& table) {
  for (const auto& row : table.rows) {
    if (row.indicator == 0) return false;
    if (row.degree >= 2 && row.indicator != -1) return false;
  }
  return true;
}

PleskenReport plesken_report(const FiniteGroup& g, const ModPCharacterTable& table) {
  PleskenReport rep;
  rep.dim = plesken_dim_formula(table);
  rep.semisimple = plesken_semisimple(table);
  if (g.order() <= kBruteforceBound) {
    rep.dim_bruteforce = plesken_dim_bruteforce(g);
    rep.bruteforce_checked = true;
    if (rep.dim_bruteforce != rep.dim)
      throw InternalError("span dimension formula " + std::to_string(rep.dim) +
                          " disagrees with brute-force rank " +
                          std::to_string(rep.dim_bruteforce));
  }
  return rep;
}

}  // namespace reality
