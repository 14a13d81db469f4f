#pragma once

#include <cstdint>
#include <vector>

#include "reality/group.hpp"

namespace reality {

/// Conjugacy class data for a fully enumerated group.
///
/// Classes are sorted by (size, minimal canonical rank of a member), so
/// class 0 is always the identity class and the numbering is deterministic
/// for a fixed group enumeration. `power_maps` holds the distinct class
/// permutations k -> class(rep_k^i) over all i coprime to the group
/// exponent (i = 1 omitted); they drive every rationality test.
struct ClassTable {
  std::vector<EIdx> reps;                 // minimal-rank member of each class
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint32_t> class_of;    // |G| entries
  std::vector<std::uint32_t> inverse_map; // class of rep^-1
  std::vector<std::uint32_t> square_map;  // class of rep^2
  std::vector<std::vector<std::uint32_t>> power_maps;

  std::size_t count() const { return reps.size(); }
};

/// Class counts plus per-class predicate flags, ordered like the table.
struct RealityProfile {
  std::uint64_t total_classes = 0;
  std::uint64_t real_classes = 0;
  std::uint64_t strongly_real_classes = 0;
  std::uint64_t rational_classes = 0;
  std::vector<bool> real_flags, strongly_real_flags, rational_flags;
};

/// Orbit sweep over conjugation by the generators.
ClassTable conjugacy_classes(const FiniteGroup& g);

/// g ~ g^-1: the class is fixed by the inverse map.
bool is_real_class(const ClassTable& t, std::size_t k);

/// Some t with t^2 = identity inverts the representative. The identity
/// class is strongly real via t = identity.
bool is_strongly_real_class(const FiniteGroup& g, const ClassTable& t, std::size_t k);

/// rep ~ rep^i for every i coprime to the order of rep.
bool is_rational_class(const FiniteGroup& g, const ClassTable& t, std::size_t k);

/// Number of solutions of g^2 = identity (identity included).
std::uint64_t involution_solution_count(const FiniteGroup& g);

RealityProfile reality_profile(const FiniteGroup& g, const ClassTable& t);

}  // namespace reality
