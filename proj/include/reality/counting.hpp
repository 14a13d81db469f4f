#pragma once

#include <cstdint>
#include <vector>

namespace reality {

struct Partition {
  std::vector<unsigned> parts;  // weakly decreasing, all positive

  unsigned sum() const;
  std::size_t count() const { return parts.size(); }
  bool operator==(const Partition&) const = default;
};

/// All partitions of n, first part largest, in descending lexicographic
/// order ({n} first, all-ones last). Bounded at n <= 64.
std::vector<Partition> partitions(unsigned n);

/// Conjugacy class count of GL_n(F_q): the sum over partitions of n of the
/// product, over nonzero part multiplicities m, of q^m - q^(m-1). Bounded
/// at n <= 8.
std::uint64_t gl_class_count(unsigned n, unsigned q);

/// Number of monic degree-m polynomials over F_q with nonzero constant term
/// whose root multiset is closed under inversion. Equivalent coefficient
/// condition: a_{m-j} = a_0 * a_j for every j (taking j = 0 forces
/// a_0^2 = 1). Counted by direct enumeration; bounded at m <= 8 and
/// q^m <= 5 * 10^7.
std::uint64_t self_reciprocal_count(unsigned q, unsigned m);

/// Real conjugacy class count of GL_n(F_q): as gl_class_count but with each
/// multiplicity factor q^m - q^(m-1) replaced by the self-reciprocal count
/// for degree m.
std::uint64_t gl_real_class_count(unsigned n, unsigned q);

/// How one partition behaves as a cycle type relative to the alternating
/// group: membership of the class, splitting into two classes, and loss of
/// reality after the split.
struct AnPartitionReport {
  bool in_an = false;    // sum minus part count is even
  bool splits = false;   // all parts odd and distinct (needs sum >= 2)
  bool nonreal = false;  // splits and (sum - part count)/2 is odd
};
AnPartitionReport an_partition_report(const Partition& p);

struct AnCounts {
  std::uint64_t total = 0;
  std::uint64_t real = 0;
};

/// Conjugacy class counts of the alternating group A_n from partition
/// bookkeeping alone: non-split classes count once, split classes twice,
/// and each nonreal split class pairs with its inverse. Bounded at n <= 64.
AnCounts an_counts(unsigned n);

bool an_is_ambivalent(unsigned n);

struct Sl2Profile {
  std::uint64_t classes = 0;
  std::uint64_t real = 0;
  std::uint64_t strongly_real = 0;
  bool has_symplectic = false;
  bool ortho_ambivalent = false;  // every character orthogonal
};

/// Closed-form reality profile of SL_2(F_q). Even q: q + 1 classes,
/// everything real and strongly real, no symplectic character. Odd q: q + 4
/// classes, exactly the two central classes strongly real, always a
/// symplectic character; all classes real when q = 1 (mod 4), exactly q
/// real when q = 3 (mod 4).
Sl2Profile sl2_expected_profile(unsigned q);

/// Whether every irreducible character of SL_n(F_q) is real with indicator
/// +1: holds exactly when n is odd, or n is divisible by 4, or the 2-part
/// of n exceeds the 2-part of q - 1.
bool sln_all_real_orthogonal(unsigned n, unsigned q);

}  // namespace reality
