#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "reality/fq.hpp"
#include "reality/perm.hpp"

namespace reality {

/// Index of an element inside its group's canonical enumeration.
using EIdx = std::uint32_t;

inline constexpr std::size_t kDefaultElementBudget = 2'000'000;

/// A fully enumerated finite group.
///
/// Construction materializes every element once; afterwards the object is
/// immutable, all queries are read-only, and concurrent reads are safe.
/// Elements are addressed by their index in the construction order, which
/// is deterministic for a fixed generator list, so index equality is
/// element equality. The canonical element ordering used for tie-breaking
/// (class representatives, minima) places the identity first and otherwise
/// follows construction order.
class FiniteGroup {
public:
  virtual ~FiniteGroup() = default;

  std::size_t order() const { return order_; }
  EIdx identity() const { return identity_; }
  const std::vector<EIdx>& generators() const { return generators_; }

  virtual EIdx mult(EIdx a, EIdx b) const = 0;
  EIdx inverse(EIdx a) const { return inverse_[a]; }

  /// t * x * t^-1.
  EIdx conjugate(EIdx t, EIdx x) const { return mult(mult(t, x), inverse_[t]); }
  /// x * y * x^-1 * y^-1.
  EIdx commutator(EIdx x, EIdx y) const { return mult(mult(x, y), mult(inverse_[x], inverse_[y])); }
  EIdx power(EIdx a, std::uint64_t e) const;

  /// Multiplicative order of an element (table built lazily, then cached).
  unsigned element_order(EIdx a) const;
  /// lcm of all element orders.
  std::uint64_t exponent() const;

  /// All g with g^2 = identity, ascending by canonical rank (identity
  /// included).
  const std::vector<EIdx>& involution_solutions() const;
  /// All g whose order is a power of two, identity included (1 = 2^0),
  /// ascending.
  const std::vector<EIdx>& two_power_elements() const;

  /// Canonical rank: 0 for the identity, index order otherwise.
  std::uint32_t canonical_rank(EIdx a) const {
    if (a == identity_) return 0;
    return a < identity_ ? a + 1 : a;
  }

  virtual std::string element_repr(EIdx a) const = 0;
  virtual std::string kind() const = 0;

protected:
  FiniteGroup() = default;
  // Derived constructors call this once all elements exist.
  void finalize(std::size_t order, EIdx identity, std::vector<EIdx> generators);
  // Backend-specific inversion used by finalize to build the inverse table;
  // the default walks g, g^2, ... until the identity.
  virtual EIdx inverse_uncached(EIdx a) const;

private:
  void ensure_orders() const;

  std::size_t order_ = 0;
  EIdx identity_ = 0;
  std::vector<EIdx> generators_;
  std::vector<EIdx> inverse_;
  mutable std::once_flag orders_once_;
  mutable std::vector<std::uint32_t> orders_;
  mutable std::uint64_t exponent_ = 0;
  mutable std::vector<EIdx> involutions_;
  mutable std::vector<EIdx> two_power_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Group of permutations generated by `generators` on `degree` points.
/// Enumeration is a breadth-first closure from the identity, multiplying
/// on the right by the generators in their given order.
class PermutationGroup final : public FiniteGroup {
public:
  PermutationGroup(unsigned degree, const std::vector<Perm>& generators,
                   std::size_t element_budget = kDefaultElementBudget);

  unsigned degree() const { return degree_; }
  Perm element(EIdx a) const;

  EIdx mult(EIdx a, EIdx b) const override;
  std::string element_repr(EIdx a) const override;
  std::string kind() const override { return "permutation"; }

protected:
  EIdx inverse_uncached(EIdx a) const override;

private:
  const std::uint16_t* at(EIdx a) const { return flat_.data() + std::size_t(a) * degree_; }
  std::uint32_t lookup(const std::uint16_t* img) const;
  EIdx insert(const std::uint16_t* img);  // construction only
  void rehash(std::size_t capacity);

  unsigned degree_ = 0;
  std::vector<std::uint16_t> flat_;
  std::vector<std::uint32_t> slots_;  // open addressing; value = index + 1
  std::size_t slot_mask_ = 0;
};

/// Square matrix over F_q with entries stored as field indices.
struct FqMat {
  unsigned n = 0;
  std::vector<std::uint8_t> e;  // row-major, n*n entries

  static FqMat identity_matrix(unsigned n);
  std::uint8_t& at(unsigned r, unsigned c) { return e[r * n + c]; }
  std::uint8_t at(unsigned r, unsigned c) const { return e[r * n + c]; }
  bool operator==(const FqMat&) const = default;
};

/// Group of invertible matrices over a shared field, enumerated by closure.
class MatrixGroup final : public FiniteGroup {
public:
  MatrixGroup(std::shared_ptr<const FqField> field, unsigned n, const std::vector<FqMat>& generators,
              std::size_t element_budget = kDefaultElementBudget);

  const FqField& field() const { return *field_; }
  unsigned dim() const { return n_; }
  FqMat element(EIdx a) const;

  EIdx mult(EIdx a, EIdx b) const override;
  std::string element_repr(EIdx a) const override;
  std::string kind() const override { return "matrix"; }

protected:
  EIdx inverse_uncached(EIdx a) const override;

private:
  const std::uint8_t* at(EIdx a) const { return flat_.data() + std::size_t(a) * n_ * n_; }
  void mul_into(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out) const;
  bool invert(const std::uint8_t* a, std::uint8_t* out) const;  // false if singular
  std::uint32_t lookup(const std::uint8_t* m) const;
  EIdx insert(const std::uint8_t* m);
  void rehash(std::size_t capacity);

  std::shared_ptr<const FqField> field_;
  unsigned n_ = 0;
  std::vector<std::uint8_t> flat_;
  std::vector<std::uint32_t> slots_;
  std::size_t slot_mask_ = 0;
};

/// Group defined by an explicit multiplication table. table[a][b] = a*b.
/// Group axioms are verified: rows/columns must be permutations, a two-sided
/// identity must exist, and associativity is checked exhaustively for order
/// <= 256; above that, 2^21 deterministic pseudo-random triples are sampled,
/// so a non-associative table of order n slips through with probability at
/// most (1 - 1/n^3)^(2^21).
class CayleyGroup final : public FiniteGroup {
public:
  explicit CayleyGroup(std::vector<std::vector<EIdx>> table);

  EIdx mult(EIdx a, EIdx b) const override { return table_[a][b]; }
  std::string element_repr(EIdx a) const override { return "g" + std::to_string(a); }
  std::string kind() const override { return "cayley"; }

protected:
  EIdx inverse_uncached(EIdx a) const override;

private:
  std::vector<std::vector<EIdx>> table_;
};

/// An automorphism of a group, stored as the image table on element indices.
struct Automorphism {
  std::vector<EIdx> image;

  EIdx operator()(EIdx a) const { return image[a]; }
  bool is_identity() const;
  Automorphism compose(const Automorphism& rhs) const;  // this(rhs(x))
  bool operator==(const Automorphism&) const = default;
};

/// Direct or semidirect product A x| B. Elements are pairs (a, b) indexed
/// as a*|B| + b; multiplication is (a,b)(a',b') = (a * phi_b(a'), b*b')
/// where phi is the action of B on A (trivial for direct products).
class ProductGroup final : public FiniteGroup {
public:
  /// `action` is either empty (direct product) or one automorphism of A per
  /// element of B, indexed by B's element indices.
  ProductGroup(GroupPtr a, GroupPtr b, std::vector<Automorphism> action,
               std::size_t element_budget = kDefaultElementBudget);

  const FiniteGroup& left() const { return *a_; }
  const FiniteGroup& right() const { return *b_; }
  bool is_direct() const { return action_.empty(); }
  std::pair<EIdx, EIdx> unpack(EIdx x) const { return {EIdx(x / bn_), EIdx(x % bn_)}; }
  EIdx pack(EIdx a, EIdx b) const { return EIdx(std::size_t(a) * bn_ + b); }

  EIdx mult(EIdx a, EIdx b) const override;
  std::string element_repr(EIdx a) const override;
  std::string kind() const override { return "product"; }

protected:
  EIdx inverse_uncached(EIdx a) const override;

private:
  EIdx act(EIdx b, EIdx a) const { return action_.empty() ? a : action_[b].image[a]; }

  GroupPtr a_, b_;
  std::size_t bn_ = 0;
  std::vector<Automorphism> action_;
};

/// A subgroup given as a sorted list of parent element indices. Borrows the
/// parent: the handle must not outlive the group it was built from.
struct SubgroupHandle {
  const FiniteGroup* parent = nullptr;
  std::vector<EIdx> elements;  // ascending

  std::size_t order() const { return elements.size(); }
  bool contains(EIdx a) const;
  bool is_abelian() const;
};

GroupPtr make_permutation_group(unsigned degree, const std::vector<Perm>& generators,
                                std::size_t element_budget = kDefaultElementBudget);

GroupPtr make_matrix_group(std::shared_ptr<const FqField> field, unsigned n,
                           const std::vector<FqMat>& generators,
                           std::size_t element_budget = kDefaultElementBudget);

GroupPtr make_cayley_group(std::vector<std::vector<EIdx>> table);

GroupPtr direct_product(GroupPtr a, GroupPtr b, std::size_t element_budget = kDefaultElementBudget);

/// Semidirect product with an explicit action (one automorphism of A per
/// element of B). Verifies that the action is a homomorphism B -> Aut(A)
/// on all pairs of B-elements and that each map is an automorphism;
/// throws NotAHomomorphism with a witness otherwise.
GroupPtr semidirect_product(GroupPtr a, GroupPtr b, std::vector<Automorphism> action,
                            std::size_t element_budget = kDefaultElementBudget);

/// All automorphisms, ordered lexicographically by the image tuple of a
/// deterministic generating sequence. Throws TooLarge above order 16.
std::vector<Automorphism> enumerate_automorphisms(const FiniteGroup& g);

/// Subgroup generated by `seed` (breadth-first closure; identity always
/// included).
SubgroupHandle subgroup_closure(const FiniteGroup& g, const std::vector<EIdx>& seed);

/// Commutator subgroup, computed as the normal closure of the commutators
/// of the generators. Equals the closure of the full commutator set.
SubgroupHandle derived_subgroup(const FiniteGroup& g);

/// A Sylow 2-subgroup, grown by iterated normalizer extension: starting
/// from a cyclic 2-subgroup, repeatedly adjoin a 2-element of the
/// normalizer lying outside the current subgroup until the full 2-part of
/// |G| is reached. Deterministic for a fixed group enumeration.
SubgroupHandle sylow_two(const FiniteGroup& g);

/// Conjugacy orbit count of the cyclic subgroups of g.
std::size_t cyclic_subgroup_class_count(const FiniteGroup& g);

}  // namespace reality
