#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace reality {

/// A permutation of {0..degree-1} stored as its image table.
/// Equality is value equality of the image tables.
class Perm {
public:
  Perm() = default;

  /// Throws InvalidGenerator unless `images` is a bijection.
  explicit Perm(std::vector<std::uint16_t> images);

  static Perm identity(unsigned degree);

  /// Builds a permutation from disjoint cycles of 0-based points.
  /// Throws InvalidGenerator on out-of-range or repeated points.
  static Perm from_cycles(unsigned degree, const std::vector<std::vector<unsigned>>& cycles);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  std::uint16_t operator[](unsigned x) const { return images_[x]; }
  const std::vector<std::uint16_t>& images() const { return images_; }

  /// Composition acting right-to-left: (a.compose(b))(x) = a(b(x)).
  Perm compose(const Perm& rhs) const;
  Perm inverse() const;
  bool is_identity() const;

  bool operator==(const Perm&) const = default;

  /// Cycle notation over 1-based points, e.g. "(1 2)(3 4)"; "()" for the
  /// identity.
  std::string cycle_string() const;

private:
  std::vector<std::uint16_t> images_;
};

}  // namespace reality
