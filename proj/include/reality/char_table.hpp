#pragma once

#include <cstdint>
#include <vector>

#include "reality/class_table.hpp"
#include "reality/group.hpp"

namespace reality {

/// Class algebra structure constants a[i][j][k]: the number of ways a fixed
/// element of class k factors as x*y with x in class i, y in class j.
/// Stored sparsely as (j, k, value) triplets grouped by i; a[0][j][k] is
/// the identity matrix and every a[i][j][k] = a[j][i][k].
struct StructureConstants {
  struct Entry {
    std::uint32_t j, k;
    std::uint64_t value;
  };
  std::size_t class_count = 0;
  std::vector<std::vector<Entry>> by_i;

  std::uint64_t at(std::size_t i, std::size_t j, std::size_t k) const;
};

struct CharacterRow {
  std::uint64_t degree = 0;
  std::vector<std::uint64_t> omega;   // central character residues per class
  std::vector<std::uint64_t> values;  // character value residues per class
  bool is_real = false;
  bool is_rational = false;
  int indicator = 0;                  // -1, 0, +1
};

/// All irreducible characters of a group, reduced modulo a prime p with
/// p = 1 (mod exponent) and p > 2*ceil(sqrt(|G|)). Row order is
/// deterministic: ascending degree, then lexicographic on the value
/// residues.
struct ModPCharacterTable {
  std::uint64_t prime = 0;
  std::vector<CharacterRow> rows;
};

struct IndicatorProfile {
  std::uint64_t orthogonal = 0;  // indicator +1
  std::uint64_t symplectic = 0;  // indicator -1
  std::uint64_t unitary = 0;     // indicator 0
};

struct GroupFlags {
  bool ambivalent = false;            // every class real
  bool strongly_real_group = false;   // every class strongly real
  bool totally_orthogonal = false;    // every character has indicator +1
  bool rational_group = false;        // every class rational
  bool sylow2_abelian = false;
  bool generated_by_involutions = false;
  bool generated_by_2elements = false;
};

struct SweepBudget {
  std::uint64_t work = 400'000'000;  // bound on |G| * class count
};

/// One sweep over the group per class k: fixes z in class k and tallies
/// class(x^-1 * z) over all x. Throws BudgetExceeded when |G| * r exceeds
/// the work budget.
StructureConstants structure_constants(const FiniteGroup& g, const ClassTable& t,
                                       const SweepBudget& budget = {});

/// Smallest prime p with p = 1 (mod exponent) and p > 2*ceil(sqrt(|G|)).
/// Throws SearchExhausted above 2^31.
std::uint64_t choose_prime(const FiniteGroup& g, const ClassTable& t);

/// Character table mod p via class-matrix eigenspace splitting: the common
/// eigenvectors of the class matrices M_i (row j, column k holding
/// a[i][j][k]) are the central characters; degrees are recovered from the
/// second orthogonality relation and values from degree * omega / |C_k|.
/// Fills degrees, omega and values only; use the functions below for
/// reality, rationality and indicators.
ModPCharacterTable dixon_character_table(const FiniteGroup& g, const ClassTable& t,
                                         const StructureConstants& s, std::uint64_t p);

/// Frobenius-Schur indicator via the squared-class sum: S = sum over k of
/// |C_k| * values[square_map[k]] equals nu * |G| (mod p) with nu in
/// {-1,0,+1}. Throws IndicatorAmbiguous if no residue matches.
int frobenius_schur_indicator(const CharacterRow& row, const ClassTable& t, std::uint64_t order,
                              std::uint64_t p);

bool character_is_real(const CharacterRow& row, const ClassTable& t);
bool character_is_rational(const CharacterRow& row, const ClassTable& t);

/// Computes the full table: classes assumed, then structure constants,
/// prime, splitting, and per-row classification. Also validates the column
/// orthogonality relation, the real class/character count identity and the
/// indicator degree sum against the involution count; violations raise
/// InternalError.
ModPCharacterTable compute_character_table(const FiniteGroup& g, const ClassTable& t,
                                           const SweepBudget& budget = {});

IndicatorProfile indicator_profile(const ModPCharacterTable& table);

GroupFlags group_flags(const FiniteGroup& g, const ClassTable& t, const RealityProfile& profile,
                       const ModPCharacterTable& table);

}  // namespace reality
