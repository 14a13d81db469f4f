#include "reality/group.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "reality/errors.hpp"

namespace reality {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

std::uint64_t hash_bytes(const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = kFnvOffset;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= kFnvPrime;
  }
  // Extra avalanche so power-of-two masking sees high entropy.
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdull;
  h ^= h >> 33;
  return h;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

// ---------------------------------------------------------------- base class

void FiniteGroup::finalize(std::size_t order, EIdx identity, std::vector<EIdx> generators) {
  order_ = order;
  identity_ = identity;
  generators_ = std::move(generators);
  inverse_.resize(order_);
  for (std::size_t a = 0; a < order_; ++a) inverse_[a] = inverse_uncached(EIdx(a));
}

EIdx FiniteGroup::inverse_uncached(EIdx a) const {
  EIdx prev = identity_, cur = a;
  while (cur != identity_) {
    const EIdx nxt = mult(cur, a);
    prev = cur;
    cur = nxt;
  }
  return prev;
}

EIdx FiniteGroup::power(EIdx a, std::uint64_t e) const {
  EIdx r = identity_, base = a;
  while (e) {
    if (e & 1) r = mult(r, base);
    base = mult(base, base);
    e >>= 1;
  }
  return r;
}

void FiniteGroup::ensure_orders() const {
  std::call_once(orders_once_, [this] {
    orders_.resize(order_);
    std::uint64_t exp = 1;
    for (std::size_t a = 0; a < order_; ++a) {
      std::uint32_t ord = 1;
      EIdx cur = EIdx(a);
      while (cur != identity_) {
        cur = mult(cur, EIdx(a));
        ++ord;
      }
      orders_[a] = ord;
      exp = std::lcm(exp, std::uint64_t(ord));
    }
    exponent_ = exp;
    involutions_.push_back(identity_);
    for (std::size_t a = 0; a < order_; ++a) {
      if (a != identity_ && orders_[a] == 2) involutions_.push_back(EIdx(a));
    }
    for (std::size_t a = 0; a < order_; ++a) {
      const std::uint32_t ord = orders_[a];
      // 1 = 2^0 counts, matching the identity-inclusive convention used for
      // the squaring equation.
      if ((ord & (ord - 1)) == 0) two_power_.push_back(EIdx(a));
    }
  });
}

unsigned FiniteGroup::element_order(EIdx a) const {
  ensure_orders();
  return orders_[a];
}

std::uint64_t FiniteGroup::exponent() const {
  ensure_orders();
  return exponent_;
}

const std::vector<EIdx>& FiniteGroup::involution_solutions() const {
  ensure_orders();
  return involutions_;
}

const std::vector<EIdx>& FiniteGroup::two_power_elements() const {
  ensure_orders();
  return two_power_;
}

// -------------------------------------------------------- permutation groups

PermutationGroup::PermutationGroup(unsigned degree, const std::vector<Perm>& generators,
                                   std::size_t element_budget)
    : degree_(degree) {
  if (degree < 1 || degree > 1024) throw TooLarge("permutation degree must be in 1..1024");
  for (const Perm& g : generators)
    if (g.degree() != degree) throw InvalidGenerator("generator degree mismatch");

  rehash(256);
  std::vector<std::uint16_t> scratch(degree);
  for (unsigned i = 0; i < degree; ++i) scratch[i] = std::uint16_t(i);
  insert(scratch.data());  // identity gets index 0

  std::vector<EIdx> gen_indices;
  std::size_t count = 1;
  for (EIdx x = 0; x < count; ++x) {
    for (const Perm& g : generators) {
      const std::uint16_t* xp = at(x);
      for (unsigned pt = 0; pt < degree; ++pt) scratch[pt] = xp[g[pt]];
      if (lookup(scratch.data()) == UINT32_MAX) {
        if (count >= element_budget)
          throw BudgetExceeded("element budget " + std::to_string(element_budget) +
                               " exceeded during permutation closure");
        insert(scratch.data());
        ++count;
      }
    }
  }
  for (const Perm& g : generators) gen_indices.push_back(lookup(g.images().data()));
  finalize(count, 0, std::move(gen_indices));
}

void PermutationGroup::rehash(std::size_t capacity) {
  std::vector<std::uint32_t> fresh(capacity, 0);
  slot_mask_ = capacity - 1;
  const std::size_t count = flat_.size() / degree_;
  std::swap(slots_, fresh);
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t s = hash_bytes(at(EIdx(i)), std::size_t(degree_) * 2) & slot_mask_;
    while (slots_[s] != 0) s = (s + 1) & slot_mask_;
    slots_[s] = std::uint32_t(i) + 1;
  }
}

std::uint32_t PermutationGroup::lookup(const std::uint16_t* img) const {
  std::size_t s = hash_bytes(img, std::size_t(degree_) * 2) & slot_mask_;
  while (true) {
    const std::uint32_t v = slots_[s];
    if (v == 0) return UINT32_MAX;
    if (std::equal(img, img + degree_, at(v - 1))) return v - 1;
    s = (s + 1) & slot_mask_;
  }
}

EIdx PermutationGroup::insert(const std::uint16_t* img) {
  const std::size_t count = flat_.size() / degree_;
  if ((count + 1) * 2 > slots_.size()) rehash(slots_.size() * 2);
  flat_.insert(flat_.end(), img, img + degree_);
  std::size_t s = hash_bytes(img, std::size_t(degree_) * 2) & slot_mask_;
  while (slots_[s] != 0) s = (s + 1) & slot_mask_;
  slots_[s] = std::uint32_t(count) + 1;
  return EIdx(count);
}

EIdx PermutationGroup::mult(EIdx a, EIdx b) const {
  std::array<std::uint16_t, 1024> scratch;
  const std::uint16_t *ap = at(a), *bp = at(b);
  for (unsigned pt = 0; pt < degree_; ++pt) scratch[pt] = ap[bp[pt]];
  return lookup(scratch.data());
}

EIdx PermutationGroup::inverse_uncached(EIdx a) const {
  std::array<std::uint16_t, 1024> scratch;
  const std::uint16_t* ap = at(a);
  for (unsigned pt = 0; pt < degree_; ++pt) scratch[ap[pt]] = std::uint16_t(pt);
  return lookup(scratch.data());
}

Perm PermutationGroup::element(EIdx a) const {
  return Perm(std::vector<std::uint16_t>(at(a), at(a) + degree_));
}

std::string PermutationGroup::element_repr(EIdx a) const { return element(a).cycle_string(); }

// ------------------------------------------------------------- matrix groups

FqMat FqMat::identity_matrix(unsigned n) {
  FqMat m;
  m.n = n;
  m.e.assign(std::size_t(n) * n, 0);
  for (unsigned i = 0; i < n; ++i) m.e[i * n + i] = 1;
  return m;
}

MatrixGroup::MatrixGroup(std::shared_ptr<const FqField> field, unsigned n,
                         const std::vector<FqMat>& generators, std::size_t element_budget)
    : field_(std::move(field)), n_(n) {
  if (n < 1 || n > 8) throw TooLarge("matrix dimension must be in 1..8");
  const unsigned q = field_->q();
  std::array<std::uint8_t, 64> scratch{};
  for (const FqMat& g : generators) {
    if (g.n != n || g.e.size() != std::size_t(n) * n)
      throw InvalidGenerator("matrix generator has wrong shape");
    for (const std::uint8_t v : g.e)
      if (v >= q) throw InvalidGenerator("matrix entry outside field");
    if (!invert(g.e.data(), scratch.data())) throw SingularGenerator("matrix generator is singular");
  }

  rehash(256);
  const FqMat id = FqMat::identity_matrix(n);
  insert(id.e.data());
  std::size_t count = 1;
  const std::size_t rec = std::size_t(n) * n;
  for (EIdx x = 0; x < count; ++x) {
    for (const FqMat& g : generators) {
      mul_into(at(x), g.e.data(), scratch.data());
      if (lookup(scratch.data()) == UINT32_MAX) {
        if (count >= element_budget)
          throw BudgetExceeded("element budget " + std::to_string(element_budget) +
                               " exceeded during matrix closure");
        insert(scratch.data());
        ++count;
      }
    }
  }
  (void)rec;
  std::vector<EIdx> gen_indices;
  for (const FqMat& g : generators) gen_indices.push_back(lookup(g.e.data()));
  finalize(count, 0, std::move(gen_indices));
}

void MatrixGroup::mul_into(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out) const {
  const FqField& f = *field_;
  for (unsigned r = 0; r < n_; ++r)
    for (unsigned c = 0; c < n_; ++c) {
      unsigned acc = 0;
      for (unsigned k = 0; k < n_; ++k) acc = f.add(acc, f.mul(a[r * n_ + k], b[k * n_ + c]));
      out[r * n_ + c] = std::uint8_t(acc);
    }
}

bool MatrixGroup::invert(const std::uint8_t* a, std::uint8_t* out) const {
  const FqField& f = *field_;
  std::array<unsigned, 64> m{};
  for (unsigned i = 0; i < n_ * n_; ++i) m[i] = a[i];
  std::array<unsigned, 64> inv{};
  for (unsigned i = 0; i < n_; ++i) inv[i * n_ + i] = 1;
  for (unsigned c = 0; c < n_; ++c) {
    unsigned piv = c;
    while (piv < n_ && m[piv * n_ + c] == 0) ++piv;
    if (piv == n_) return false;
    if (piv != c)
      for (unsigned j = 0; j < n_; ++j) {
        std::swap(m[piv * n_ + j], m[c * n_ + j]);
        std::swap(inv[piv * n_ + j], inv[c * n_ + j]);
      }
    const unsigned s = f.inv(m[c * n_ + c]);
    for (unsigned j = 0; j < n_; ++j) {
      m[c * n_ + j] = f.mul(m[c * n_ + j], s);
      inv[c * n_ + j] = f.mul(inv[c * n_ + j], s);
    }
    for (unsigned r = 0; r < n_; ++r) {
      if (r == c || m[r * n_ + c] == 0) continue;
      const unsigned fct = m[r * n_ + c];
      for (unsigned j = 0; j < n_; ++j) {
        m[r * n_ + j] = f.sub(m[r * n_ + j], f.mul(fct, m[c * n_ + j]));
        inv[r * n_ + j] = f.sub(inv[r * n_ + j], f.mul(fct, inv[c * n_ + j]));
      }
    }
  }
  for (unsigned i = 0; i < n_ * n_; ++i) out[i] = std::uint8_t(inv[i]);
  return true;
}

void MatrixGroup::rehash(std::size_t capacity) {
  std::vector<std::uint32_t> fresh(capacity, 0);
  slot_mask_ = capacity - 1;
  const std::size_t rec = std::size_t(n_) * n_;
  const std::size_t count = flat_.size() / rec;
  std::swap(slots_, fresh);
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t s = hash_bytes(at(EIdx(i)), rec) & slot_mask_;
    while (slots_[s] != 0) s = (s + 1) & slot_mask_;
    slots_[s] = std::uint32_t(i) + 1;
  }
}

std::uint32_t MatrixGroup::lookup(const std::uint8_t* m) const {
  const std::size_t rec = std::size_t(n_) * n_;
  std::size_t s = hash_bytes(m, rec) & slot_mask_;
  while (true) {
    const std::uint32_t v = slots_[s];
    if (v == 0) return UINT32_MAX;
    if (std::equal(m, m + rec, at(v - 1))) return v - 1;
    s = (s + 1) & slot_mask_;
  }
}

EIdx MatrixGroup::insert(const std::uint8_t* m) {
  const std::size_t rec = std::size_t(n_) * n_;
  const std::size_t count = flat_.size() / rec;
  if ((count + 1) * 2 > slots_.size()) rehash(slots_.size() * 2);
  flat_.insert(flat_.end(), m, m + rec);
  std::size_t s = hash_bytes(m, rec) & slot_mask_;
  while (slots_[s] != 0) s = (s + 1) & slot_mask_;
  slots_[s] = std::uint32_t(count) + 1;
  return EIdx(count);
}

EIdx MatrixGroup::mult(EIdx a, EIdx b) const {
  std::array<std::uint8_t, 64> scratch;
  mul_into(at(a), at(b), scratch.data());
  return lookup(scratch.data());
}

EIdx MatrixGroup::inverse_uncached(EIdx a) const {
  std::array<std::uint8_t, 64> scratch;
  invert(at(a), scratch.data());
  return lookup(scratch.data());
}

FqMat MatrixGroup::element(EIdx a) const {
  FqMat m;
  m.n = n_;
  m.e.assign(at(a), at(a) + std::size_t(n_) * n_);
  return m;
}

std::string MatrixGroup::element_repr(EIdx a) const {
  const std::uint8_t* m = at(a);
  std::string s = "[";
  for (unsigned r = 0; r < n_; ++r) {
    s += "[";
    for (unsigned c = 0; c < n_; ++c) {
      s += field_->repr(m[r * n_ + c]);
      if (c + 1 < n_) s += ",";
    }
    s += "]";
  }
  return s + "]";
}

// ------------------------------------------------------------- cayley groups

CayleyGroup::CayleyGroup(std::vector<std::vector<EIdx>> table) : table_(std::move(table)) {
  const std::size_t n = table_.size();
  if (n == 0) throw NotAGroup("empty multiplication table");
  for (std::size_t r = 0; r < n; ++r)
    if (table_[r].size() != n) throw NotAGroup("row " + std::to_string(r) + " has wrong length");
  std::vector<bool> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), false);
    for (const EIdx v : table_[r]) {
      if (v >= n || seen[v]) throw NotAGroup("row " + std::to_string(r) + " is not a permutation");
      seen[v] = true;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t r = 0; r < n; ++r) {
      const EIdx v = table_[r][c];
      if (seen[v]) throw NotAGroup("column " + std::to_string(c) + " is not a permutation");
      seen[v] = true;
    }
  }
  EIdx id = UINT32_MAX;
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) {
      id = EIdx(e);
      break;
    }
  }
  if (id == UINT32_MAX) throw NotAGroup("no two-sided identity");

  auto check_triple = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
      throw NotAGroup("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) +
                      "," + std::to_string(c) + ")");
  };
  if (n <= 256) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    std::uint64_t state = 0x5eed;
    for (int i = 0; i < (1 << 21); ++i) {
      const std::size_t a = splitmix64(state) % n, b = splitmix64(state) % n,
                        c = splitmix64(state) % n;
      check_triple(a, b, c);
    }
  }

  std::vector<EIdx> gens;
  // Every element works as a generator list; keep it minimal via greedy
  // growth so conjugacy sweeps stay cheap.
  std::vector<char> in(n, 0);
  in[id] = 1;
  std::size_t covered = 1;
  while (covered < n) {
    EIdx next = UINT32_MAX;
    for (std::size_t a = 0; a < n; ++a)
      if (!in[a]) {
        next = EIdx(a);
        break;
      }
    gens.push_back(next);
    // close under current generators
    std::fill(in.begin(), in.end(), 0);
    std::vector<EIdx> stack = {id};
    in[id] = 1;
    covered = 1;
    while (!stack.empty()) {
      const EIdx x = stack.back();
      stack.pop_back();
      for (const EIdx g : gens) {
        const EIdx y = table_[x][g];
        if (!in[y]) {
          in[y] = 1;
          ++covered;
          stack.push_back(y);
        }
      }
    }
  }
  finalize(n, id, std::move(gens));
}

EIdx CayleyGroup::inverse_uncached(EIdx a) const {
  for (EIdx b = 0; b < table_.size(); ++b)
    if (table_[a][b] == identity()) return b;
  throw InternalError("cayley row without inverse");
}

// ------------------------------------------------------------ product groups

bool Automorphism::is_identity() const {
  for (std::size_t i = 0; i < image.size(); ++i)
    if (image[i] != i) return false;
  return true;
}

Automorphism Automorphism::compose(const Automorphism& rhs) const {
  Automorphism r;
  r.image.resize(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) r.image[i] = image[rhs.image[i]];
  return r;
}

ProductGroup::ProductGroup(GroupPtr a, GroupPtr b, std::vector<Automorphism> action,
                           std::size_t element_budget)
    : a_(std::move(a)), b_(std::move(b)), bn_(b_->order()), action_(std::move(action)) {
  const std::size_t n = a_->order() * b_->order();
  if (n > element_budget)
    throw BudgetExceeded("product order " + std::to_string(n) + " exceeds element budget");
  std::vector<EIdx> gens;
  for (const EIdx g : a_->generators()) gens.push_back(pack(g, b_->identity()));
  for (const EIdx g : b_->generators()) gens.push_back(pack(a_->identity(), g));
  finalize(n, pack(a_->identity(), b_->identity()), std::move(gens));
}

EIdx ProductGroup::mult(EIdx x, EIdx y) const {
  const auto [xa, xb] = unpack(x);
  const auto [ya, yb] = unpack(y);
  return pack(a_->mult(xa, act(xb, ya)), b_->mult(xb, yb));
}

EIdx ProductGroup::inverse_uncached(EIdx x) const {
  const auto [xa, xb] = unpack(x);
  const EIdx bi = b_->inverse(xb);
  return pack(act(bi, a_->inverse(xa)), bi);
}

std::string ProductGroup::element_repr(EIdx x) const {
  const auto [xa, xb] = unpack(x);
  return "(" + a_->element_repr(xa) + "," + b_->element_repr(xb) + ")";
}

// ------------------------------------------------------------------ builders

GroupPtr make_permutation_group(unsigned degree, const std::vector<Perm>& generators,
                                std::size_t element_budget) {
  return std::make_shared<PermutationGroup>(degree, generators, element_budget);
}

GroupPtr make_matrix_group(std::shared_ptr<const FqField> field, unsigned n,
                           const std::vector<FqMat>& generators, std::size_t element_budget) {
  return std::make_shared<MatrixGroup>(std::move(field), n, generators, element_budget);
}

GroupPtr make_cayley_group(std::vector<std::vector<EIdx>> table) {
  return std::make_shared<CayleyGroup>(std::move(table));
}

GroupPtr direct_product(GroupPtr a, GroupPtr b, std::size_t element_budget) {
  return std::make_shared<ProductGroup>(std::move(a), std::move(b), std::vector<Automorphism>{},
                                        element_budget);
}

GroupPtr semidirect_product(GroupPtr a, GroupPtr b, std::vector<Automorphism> action,
                            std::size_t element_budget) {
  if (action.size() != b->order())
    throw NotAHomomorphism("action must assign one automorphism per element of the acting group");
  const std::size_t an = a->order();
  for (std::size_t bi = 0; bi < action.size(); ++bi) {
    const Automorphism& phi = action[bi];
    if (phi.image.size() != an)
      throw NotAHomomorphism("automorphism " + std::to_string(bi) + " has wrong domain size");
    std::vector<bool> seen(an, false);
    for (const EIdx y : phi.image) {
      if (y >= an || seen[y])
        throw NotAHomomorphism("automorphism " + std::to_string(bi) + " is not a bijection");
      seen[y] = true;
    }
    if (phi.image[a->identity()] != a->identity())
      throw NotAHomomorphism("automorphism " + std::to_string(bi) + " moves the identity");
    for (const EIdx g : a->generators())
      for (EIdx z = 0; z < an; ++z)
        if (phi.image[a->mult(g, z)] != a->mult(phi.image[g], phi.image[z]))
          throw NotAHomomorphism("map " + std::to_string(bi) + " is not multiplicative at (" +
                                 std::to_string(g) + "," + std::to_string(z) + ")");
  }
  for (EIdx b1 = 0; b1 < b->order(); ++b1)
    for (EIdx b2 = 0; b2 < b->order(); ++b2) {
      const Automorphism comp = action[b1].compose(action[b2]);
      if (!(comp == action[b->mult(b1, b2)]))
        throw NotAHomomorphism("action is not a homomorphism at pair (" + std::to_string(b1) +
                               "," + std::to_string(b2) + ")");
    }
  return std::make_shared<ProductGroup>(std::move(a), std::move(b), std::move(action),
                                        element_budget);
}

}  // namespace reality
