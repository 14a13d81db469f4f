#include <algorithm>
#include <map>

#include "reality/errors.hpp"
#include "reality/group.hpp"

namespace reality {

bool SubgroupHandle::contains(EIdx a) const {
  return std::binary_search(elements.begin(), elements.end(), a);
}

bool SubgroupHandle::is_abelian() const {
  for (const EIdx x : elements)
    for (const EIdx y : elements) {
      if (y >= x) break;
      if (parent->mult(x, y) != parent->mult(y, x)) return false;
    }
  return true;
}

SubgroupHandle subgroup_closure(const FiniteGroup& g, const std::vector<EIdx>& seed) {
  std::vector<char> in(g.order(), 0);
  std::vector<EIdx> stack = {g.identity()}, elems = {g.identity()};
  in[g.identity()] = 1;
  while (!stack.empty()) {
    const EIdx x = stack.back();
    stack.pop_back();
    for (const EIdx s : seed) {
      const EIdx y = g.mult(x, s);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
        stack.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return SubgroupHandle{&g, std::move(elems)};
}

SubgroupHandle derived_subgroup(const FiniteGroup& g) {
  std::vector<EIdx> seed;
  auto add_unique = [&](EIdx c) {
    if (std::find(seed.begin(), seed.end(), c) == seed.end()) seed.push_back(c);
  };
  for (const EIdx x : g.generators())
    for (const EIdx y : g.generators()) {
      const EIdx c = g.commutator(x, y);
      if (c != g.identity()) add_unique(c);
    }
  SubgroupHandle h = subgroup_closure(g, seed);
  // Normal closure: conjugating the seeds by the group generators until
  // stable gives the subgroup generated by all commutators.
  bool grew = true;
  while (grew) {
    grew = false;
    for (const EIdx x : h.elements) {
      for (const EIdx t : g.generators()) {
        const EIdx c = g.conjugate(t, x);
        if (!h.contains(c)) {
          seed.push_back(c);
          h = subgroup_closure(g, seed);
          grew = true;
          break;
        }
      }
      if (grew) break;
    }
  }
  return h;
}

namespace {

std::size_t two_part(std::size_t n) {
  std::size_t t = 1;
  while (n % 2 == 0) {
    n /= 2;
    t *= 2;
  }
  return t;
}

}  // namespace

SubgroupHandle sylow_two(const FiniteGroup& g) {
  const std::size_t target = two_part(g.order());
  if (target == 1) return subgroup_closure(g, {});
  // Deterministic start: the 2-element of maximal order, first by canonical
  // rank among ties.
  EIdx start = UINT32_MAX;
  unsigned best = 0;
  for (const EIdx x : g.two_power_elements()) {
    const unsigned o = g.element_order(x);
    if (o > best) {
      best = o;
      start = x;
    }
  }
  std::vector<EIdx> gens = {start};
  SubgroupHandle p = subgroup_closure(g, gens);
  while (p.order() < target) {
    std::vector<char> in(g.order(), 0);
    for (const EIdx x : p.elements) in[x] = 1;
    EIdx found = UINT32_MAX;
    for (const EIdx x : g.two_power_elements()) {
      if (in[x]) continue;
      bool normalizes = true;
      for (const EIdx h : p.elements)
        if (!in[g.conjugate(x, h)]) {
          normalizes = false;
          break;
        }
      if (normalizes) {
        found = x;
        break;
      }
    }
    if (found == UINT32_MAX)
      throw InternalError("sylow growth stalled below the 2-part of the group order");
    gens.push_back(found);
    p = subgroup_closure(g, gens);
  }
  return p;
}

std::size_t cyclic_subgroup_class_count(const FiniteGroup& g) {
  std::map<std::vector<EIdx>, std::uint32_t> ids;
  std::vector<const std::vector<EIdx>*> keys;
  for (EIdx a = 0; a < g.order(); ++a) {
    std::vector<EIdx> s;
    EIdx cur = g.identity();
    do {
      s.push_back(cur);
      cur = g.mult(cur, a);
    } while (cur != g.identity());
    std::sort(s.begin(), s.end());
    const auto [it, fresh] = ids.emplace(std::move(s), std::uint32_t(ids.size()));
    if (fresh) keys.push_back(&it->first);
  }
  std::vector<char> visited(ids.size(), 0);
  std::size_t orbits = 0;
  for (std::uint32_t i = 0; i < keys.size(); ++i) {
    if (visited[i]) continue;
    ++orbits;
    std::vector<std::uint32_t> stack = {i};
    visited[i] = 1;
    while (!stack.empty()) {
      const std::uint32_t s = stack.back();
      stack.pop_back();
      for (const EIdx t : g.generators()) {
        std::vector<EIdx> conj;
        conj.reserve(keys[s]->size());
        for (const EIdx x : *keys[s]) conj.push_back(g.conjugate(t, x));
        std::sort(conj.begin(), conj.end());
        const auto it = ids.find(conj);
        if (it == ids.end()) throw InternalError("conjugate of a cyclic subgroup not enumerated");
        if (!visited[it->second]) {
          visited[it->second] = 1;
          stack.push_back(it->second);
        }
      }
    }
  }
  return orbits;
}

std::vector<Automorphism> enumerate_automorphisms(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n > 16) throw TooLarge("automorphism enumeration is limited to order <= 16");

  // Greedy minimal generating sequence in canonical rank order.
  std::vector<EIdx> gens;
  {
    SubgroupHandle h = subgroup_closure(g, {});
    while (h.order() < n) {
      EIdx next = UINT32_MAX;
      for (EIdx a = 0; a < n; ++a)
        if (!h.contains(a)) {
          next = a;
          break;
        }
      gens.push_back(next);
      h = subgroup_closure(g, gens);
    }
  }

  // Express every element as parent * generator, breadth-first.
  std::vector<EIdx> bfs_order;
  std::vector<EIdx> parent(n, UINT32_MAX);
  std::vector<unsigned> via(n, 0);
  {
    std::vector<char> seen(n, 0);
    seen[g.identity()] = 1;
    std::vector<EIdx> queue = {g.identity()};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const EIdx x = queue[qi];
      for (unsigned gi = 0; gi < gens.size(); ++gi) {
        const EIdx y = g.mult(x, gens[gi]);
        if (!seen[y]) {
          seen[y] = 1;
          parent[y] = x;
          via[y] = gi;
          bfs_order.push_back(y);
          queue.push_back(y);
        }
      }
    }
  }

  // Candidate images must preserve element order.
  std::vector<std::vector<EIdx>> cands(gens.size());
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const unsigned o = g.element_order(gens[gi]);
    for (EIdx b = 0; b < n; ++b)
      if (g.element_order(b) == o) cands[gi].push_back(b);
  }

  std::vector<Automorphism> result;
  std::vector<std::size_t> pick(gens.size(), 0);
  std::vector<EIdx> phi(n);
  std::vector<char> hit(n);
  while (true) {
    bool ok = true;
    std::fill(hit.begin(), hit.end(), 0);
    phi[g.identity()] = g.identity();
    hit[g.identity()] = 1;
    for (const EIdx y : bfs_order) {
      const EIdx img = g.mult(phi[parent[y]], cands[via[y]][pick[via[y]]]);
      if (hit[img]) {
        ok = false;
        break;
      }
      phi[y] = img;
      hit[img] = 1;
    }
    if (ok) {
      for (EIdx x = 0; x < n && ok; ++x)
        for (EIdx y = 0; y < n; ++y)
          if (phi[g.mult(x, y)] != g.mult(phi[x], phi[y])) {
            ok = false;
            break;
          }
      if (ok) result.push_back(Automorphism{phi});
    }
    // Odometer over candidate tuples, most significant digit first.
    std::size_t d = gens.size();
    while (d-- > 0) {
      if (++pick[d] < cands[d].size()) break;
      pick[d] = 0;
      if (d == 0) return result;
    }
    if (gens.empty()) return result;  // trivial group: only the identity map
  }
}

}  // namespace reality
