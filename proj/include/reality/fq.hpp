#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace reality {

/// Arithmetic for the finite field F_q, q = p^k.
///
/// Elements are canonical indices 0..q-1. For prime q the index is the
/// residue itself; for extension fields the index encodes the coefficient
/// vector of the representative polynomial in base p (index = sum c_i p^i),
/// reduced modulo a fixed irreducible monic modulus. The modulus is the
/// first irreducible monic polynomial of degree k when coefficient vectors
/// are enumerated in base-p counting order, so every F_q here is bitwise
/// reproducible. Since each element has exactly one index, index equality
/// is field-element equality and hashing needs no canonicalization step.
class FqField {
public:
  /// Throws NotPrimePower unless q = p^k with p prime, 2 <= q <= 256.
  explicit FqField(unsigned q);

  unsigned q() const { return q_; }
  unsigned characteristic() const { return p_; }
  unsigned degree() const { return k_; }

  /// Modulus coefficients c_0..c_k (c_k = 1); empty for prime fields.
  const std::vector<unsigned>& modulus() const { return modulus_; }

  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned sub(unsigned a, unsigned b) const { return add_[a * q_ + neg_[b]]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  /// Multiplicative inverse; a must be nonzero.
  unsigned inv(unsigned a) const;
  unsigned pow(unsigned a, std::uint64_t e) const;

  unsigned multiplicative_order(unsigned a) const;
  /// Smallest-index generator of the multiplicative group.
  unsigned primitive_element() const { return primitive_; }

  /// Human-readable form: the residue for prime fields, otherwise the
  /// base-p digit string of the representative polynomial, e.g. "t+2".
  std::string repr(unsigned a) const;

private:
  unsigned q_ = 0, p_ = 0, k_ = 0, primitive_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<std::uint16_t> add_, mul_;
  std::vector<std::uint16_t> neg_, inv_;
};

}  // namespace reality
