#include "reality/class_table.hpp"

#include <algorithm>
#include <numeric>

#include "reality/errors.hpp"

namespace reality {

ClassTable conjugacy_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> raw_class(n, UINT32_MAX);
  struct RawClass {
    EIdx min_rank_member;
    std::uint32_t min_rank;
    std::uint64_t size;
  };
  std::vector<RawClass> raw;

  // Conjugation orbits, discovered in canonical rank order so the sweep is
  // deterministic. Orbits under the generators equal orbits under the full
  // group because conjugation by any element factors through generators.
  std::vector<EIdx> stack;
  for (std::size_t rank = 0; rank < n; ++rank) {
    const EIdx seed = rank == 0 ? g.identity()
                                : (EIdx(rank) <= g.identity() ? EIdx(rank) - 1 : EIdx(rank));
    if (raw_class[seed] != UINT32_MAX) continue;
    const std::uint32_t id = std::uint32_t(raw.size());
    raw.push_back({seed, std::uint32_t(rank), 0});
    raw_class[seed] = id;
    stack.assign(1, seed);
    std::uint64_t size = 0;
    while (!stack.empty()) {
      const EIdx x = stack.back();
      stack.pop_back();
      ++size;
      for (const EIdx t : g.generators()) {
        const EIdx y = g.conjugate(t, x);
        if (raw_class[y] == UINT32_MAX) {
          raw_class[y] = id;
          stack.push_back(y);
        }
      }
    }
    raw[id].size = size;
  }

  // Deterministic class order: by (size, minimal member rank).
  std::vector<std::uint32_t> order(raw.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (raw[a].size != raw[b].size) return raw[a].size < raw[b].size;
    return raw[a].min_rank < raw[b].min_rank;
  });
  std::vector<std::uint32_t> remap(raw.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) remap[order[i]] = i;

  ClassTable t;
  const std::size_t r = raw.size();
  t.reps.resize(r);
  t.sizes.resize(r);
  t.class_of.resize(n);
  for (std::uint32_t i = 0; i < r; ++i) {
    t.reps[remap[i]] = raw[i].min_rank_member;
    t.sizes[remap[i]] = raw[i].size;
  }
  for (std::size_t x = 0; x < n; ++x) t.class_of[x] = remap[raw_class[x]];

  t.inverse_map.resize(r);
  t.square_map.resize(r);
  for (std::size_t k = 0; k < r; ++k) {
    t.inverse_map[k] = t.class_of[g.inverse(t.reps[k])];
    t.square_map[k] = t.class_of[g.mult(t.reps[k], t.reps[k])];
  }

  const std::uint64_t e = g.exponent();
  for (std::uint64_t i = 2; i < e; ++i) {
    if (std::gcd(i, e) != 1) continue;
    std::vector<std::uint32_t> pm(r);
    for (std::size_t k = 0; k < r; ++k) pm[k] = t.class_of[g.power(t.reps[k], i)];
    if (std::find(t.power_maps.begin(), t.power_maps.end(), pm) == t.power_maps.end())
      t.power_maps.push_back(std::move(pm));
  }
  return t;
}

bool is_real_class(const ClassTable& t, std::size_t k) { return t.inverse_map[k] == k; }

bool is_strongly_real_class(const FiniteGroup& g, const ClassTable& t, std::size_t k) {
  const EIdx rep = t.reps[k];
  const EIdx inv = g.inverse(rep);
  for (const EIdx s : g.involution_solutions())
    if (g.mult(g.mult(s, rep), s) == inv) return true;
  return false;
}

bool is_rational_class(const FiniteGroup& g, const ClassTable& t, std::size_t k) {
  (void)g;
  for (const auto& pm : t.power_maps)
    if (pm[k] != k) return false;
  return true;
}

std::uint64_t involution_solution_count(const FiniteGroup& g) {
  return g.involution_solutions().size();
}

RealityProfile reality_profile(const FiniteGroup& g, const ClassTable& t) {
  RealityProfile p;
  const std::size_t r = t.count();
  p.total_classes = r;
  p.real_flags.resize(r);
  p.strongly_real_flags.resize(r);
  p.rational_flags.resize(r);
  for (std::size_t k = 0; k < r; ++k) {
    const bool re = is_real_class(t, k);
    const bool sr = is_strongly_real_class(g, t, k);
    const bool ra = is_rational_class(g, t, k);
    p.real_flags[k] = re;
    p.strongly_real_flags[k] = sr;
    p.rational_flags[k] = ra;
    p.real_classes += re;
    p.strongly_real_classes += sr;
    p.rational_classes += ra;
    if (sr && !re) throw InternalError("strongly real class is not real");
  }
  return p;
}

}  // namespace reality
