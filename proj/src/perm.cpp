#include "reality/perm.hpp"

#include "reality/errors.hpp"

namespace reality {

Perm::Perm(std::vector<std::uint16_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (const std::uint16_t y : images_) {
    if (y >= images_.size() || seen[y])
      throw InvalidGenerator("permutation image table is not a bijection");
    seen[y] = true;
  }
}

Perm Perm::identity(unsigned degree) {
  std::vector<std::uint16_t> img(degree);
  for (unsigned i = 0; i < degree; ++i) img[i] = std::uint16_t(i);
  return Perm(std::move(img));
}

Perm Perm::from_cycles(unsigned degree, const std::vector<std::vector<unsigned>>& cycles) {
  std::vector<std::uint16_t> img(degree);
  for (unsigned i = 0; i < degree; ++i) img[i] = std::uint16_t(i);
  std::vector<bool> used(degree, false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const unsigned from = cyc[i], to = cyc[(i + 1) % cyc.size()];
      if (from >= degree || to >= degree) throw InvalidGenerator("cycle point out of range");
      if (used[from]) throw InvalidGenerator("point repeated across cycles");
      used[from] = true;
      img[from] = std::uint16_t(to);
    }
  }
  return Perm(std::move(img));
}

Perm Perm::compose(const Perm& rhs) const {
  std::vector<std::uint16_t> img(images_.size());
  for (unsigned x = 0; x < images_.size(); ++x) img[x] = images_[rhs.images_[x]];
  Perm r;
  r.images_ = std::move(img);  // bijection by construction, skip revalidation
  return r;
}

Perm Perm::inverse() const {
  std::vector<std::uint16_t> img(images_.size());
  for (unsigned x = 0; x < images_.size(); ++x) img[images_[x]] = std::uint16_t(x);
  Perm r;
  r.images_ = std::move(img);
  return r;
}

bool Perm::is_identity() const {
  for (unsigned x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::string Perm::cycle_string() const {
  std::string s;
  std::vector<bool> seen(images_.size(), false);
  for (unsigned start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    s += "(";
    unsigned x = start;
    bool first = true;
    do {
      if (!first) s += " ";
      s += std::to_string(x + 1);
      first = false;
      seen[x] = true;
      x = images_[x];
    } while (x != start);
    s += ")";
  }
  return s.empty() ? "()" : s;
}

}  // namespace reality
