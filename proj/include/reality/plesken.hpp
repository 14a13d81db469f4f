#pragma once

#include <cstdint>

#include "reality/char_table.hpp"
#include "reality/group.hpp"

namespace reality {

/// Report on the Lie algebra spanned by the differences g - g^-1 inside the
/// rational group algebra, under the commutator bracket.
struct PleskenReport {
  std::uint64_t dim = 0;             // indicator-weighted dimension formula
  std::uint64_t dim_bruteforce = 0;  // sparse integer rank, when computed
  bool bruteforce_checked = false;
  bool semisimple = false;
};

/// Rank over the rationals of {g - g^-1 : g in G}, by fraction-free integer
/// elimination on sparse rows. Bounded at |G| <= 5000.
std::uint64_t plesken_dim_bruteforce(const FiniteGroup& g);

/// Dimension via indicators: an orthogonal character contributes d(d-1)/2,
/// a symplectic one d(d+1)/2, and the complex characters d^2/2 each (they
/// pair up, so the total stays integral).
std::uint64_t plesken_dim_formula(const ModPCharacterTable& table);

/// The algebra is semisimple exactly when no character is complex and every
/// character of degree at least 2 is symplectic.
bool plesken_semisimple(const ModPCharacterTable& table);

/// Formula value, semisimplicity predicate, and (within budget) the
/// brute-force rank cross-check; a mismatch raises InternalError.
PleskenReport plesken_report(const FiniteGroup& g, const ModPCharacterTable& table);

}  // namespace reality
