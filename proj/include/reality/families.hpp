#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "reality/fq.hpp"
#include "reality/group.hpp"
#include "reality/perm.hpp"

namespace reality {

/// Named constructors for the standard group families, plus the surface
/// syntax used by the CLI and the fixture file:
///
///   spec  := atom ( 'x' atom )*                     direct products, left-assoc
///   atom  := S<n> | A<n> | D<n> | C<n> | Q8
///          | SL(<n>,<q>) | GL(<n>,<q>)
///          | sdp(<spec>,<spec>,<action-index>)
///          | perm:<generators>
///
/// Family tags are case-insensitive and whitespace between tokens is
/// ignored. D<n> is the dihedral group of order 2n. A perm: atom lists
/// permutation generators as parenthesized cycles of 1-based points
/// ("perm:(1 2)(3 4),(1 2 3)"); points are separated by spaces or commas,
/// generators by ',' or ';', and the degree is the largest point named.
/// sdp(A,B,k) builds the semidirect product of A by a cyclic group B,
/// acting through the k-th automorphism of A in enumeration order.

enum class FamilyTag { S, A, D, C, Q8, SL, GL, Product, Semidirect, Perm, Cayley };

/// Parsed form of a group spec. Parameter use depends on the tag:
/// n for S/A/D/C, (n, q) for SL/GL, sub-specs for products, sub-specs plus
/// action_index for semidirect products, degree n plus generators for perm
/// atoms, an explicit table for cayley specs (no surface syntax).
struct FamilySpec {
  FamilyTag tag = FamilyTag::Q8;
  unsigned n = 0;
  unsigned q = 0;
  std::vector<FamilySpec> subs;
  unsigned action_index = 0;
  std::vector<Perm> perm_generators;
  std::vector<std::vector<EIdx>> table;
};

/// Symmetric group on n points (n <= 10), generated by a transposition and
/// an n-cycle. n <= 1 yields the trivial group.
GroupPtr make_symmetric(unsigned n, std::size_t element_budget = kDefaultElementBudget);

/// Alternating group on n points (n <= 10), generated by the consecutive
/// 3-cycles (i, i+1, i+2). n <= 2 yields the trivial group.
GroupPtr make_alternating(unsigned n, std::size_t element_budget = kDefaultElementBudget);

/// Dihedral group of order 2n (n <= 512): symmetries of the regular n-gon.
GroupPtr make_dihedral(unsigned n, std::size_t element_budget = kDefaultElementBudget);

/// Cyclic group of order n (n <= 512) as the rotation group on n points.
GroupPtr make_cyclic(unsigned n, std::size_t element_budget = kDefaultElementBudget);

/// The quaternion group {±1, ±i, ±j, ±k} as an explicit Cayley table.
GroupPtr make_quaternion8();

/// Field with q elements, q = p^k <= 81. Extensions use the first
/// irreducible monic modulus in base-p coefficient order.
std::shared_ptr<const FqField> make_field(unsigned q);

/// SL_n(F_q) for n in {1,2} and q in {2,3,4,5,7,8,9}, generated by the
/// elementary transvections with entries running over a basis of F_q.
GroupPtr make_special_linear(unsigned n, unsigned q,
                             std::size_t element_budget = kDefaultElementBudget);

/// GL_n(F_q), same parameter range: the SL_n generators plus diag(z, 1,...)
/// for a primitive element z.
GroupPtr make_general_linear(unsigned n, unsigned q,
                             std::size_t element_budget = kDefaultElementBudget);

/// The double covers used to validate the lifted-table fixtures:
/// ("Atilde4", SL_2(3)), ("Atilde5", SL_2(5)) and the candidate
/// ("Stilde4-candidate", GL_2(3)). The first two are the standard
/// isomorphisms; the third matches the expected profile but is not an
/// identification.
std::vector<std::pair<std::string, GroupPtr>> cover_candidates();

/// Parses the surface syntax above. Throws ParseError with the offending
/// offset; no group is constructed yet.
FamilySpec parse_group_spec(const std::string& text);

/// Builds the group a FamilySpec names. Parameter violations raise
/// BudgetExceeded (size), NotPrimePower (bad q) or UnknownFamily
/// (unsupported combination).
GroupPtr construct(const FamilySpec& spec, std::size_t element_budget = kDefaultElementBudget);

/// parse_group_spec + construct in one step.
GroupPtr build_group(const std::string& text, std::size_t element_budget = kDefaultElementBudget);

}  // namespace reality
