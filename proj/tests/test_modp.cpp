#include <cstdint>

#include "doctest.h"
#include "reality/errors.hpp"
#include "reality/modp.hpp"

namespace mp = reality::modp;

namespace {

// Deterministic pseudo-random residues for matrix fuzzing.
std::uint64_t splitmix(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

mp::Mat random_matrix(std::size_t n, mp::u64 p, std::uint64_t seed) {
  std::uint64_t state = seed;
  mp::Mat a(n, mp::Vec(n));
  for (auto& row : a)
    for (auto& v : row) v = splitmix(state) % p;
  return a;
}

mp::u64 det_shifted(const mp::Mat& a, mp::u64 lambda, mp::u64 p) {
  mp::Mat m = a;
  for (std::size_t i = 0; i < m.size(); ++i) {
    // lambda*I - a
    for (std::size_t j = 0; j < m.size(); ++j) m[i][j] = mp::sub(0, m[i][j], p);
    m[i][i] = mp::add(m[i][i], lambda, p);
  }
  return mp::det(m, p);
}

}  // namespace

TEST_CASE("primality") {
  CHECK(mp::is_prime(2));
  CHECK(mp::is_prime(3));
  CHECK(mp::is_prime(7));
  CHECK(mp::is_prime(13));
  CHECK(mp::is_prime(61));
  CHECK(mp::is_prime(241));
  CHECK(mp::is_prime(257));
  CHECK(mp::is_prime(7561));
  CHECK_FALSE(mp::is_prime(0));
  CHECK_FALSE(mp::is_prime(1));
  CHECK_FALSE(mp::is_prime(4));
  CHECK_FALSE(mp::is_prime(2047));  // 23 * 89
  CHECK_FALSE(mp::is_prime(7560));
}

TEST_CASE("field arithmetic") {
  const mp::u64 p = 13;
  for (mp::u64 a = 1; a < p; ++a) {
    CHECK(mp::mul(a, mp::inv(a, p), p) == 1);
    CHECK(mp::add(a, mp::sub(0, a, p), p) == 0);
  }
  CHECK(mp::pow(3, 0, 7) == 1);
  CHECK(mp::pow(3, 6, 7) == 1);
  CHECK(mp::pow(2, 10, 1009) == 15);
  CHECK_THROWS_AS((void)mp::inv(0, 13), reality::InternalError);
}

TEST_CASE("characteristic polynomial agrees with the determinant oracle") {
  const mp::u64 p = 101;
  for (std::size_t n = 1; n <= 6; ++n) {
    const mp::Mat a = random_matrix(n, p, 0xabc0 + n);
    const mp::Vec c = mp::charpoly(a, p);
    REQUIRE(c.size() == n + 1);
    CHECK(c[n] == 1);
    for (mp::u64 lambda : {mp::u64(0), mp::u64(1), mp::u64(2), mp::u64(17), mp::u64(100)})
      CHECK(mp::poly_eval(c, lambda, p) == det_shifted(a, lambda, p));
  }
}

TEST_CASE("charpoly roots of a diagonal matrix are its entries") {
  const mp::u64 p = 31;
  mp::Mat a(4, mp::Vec(4, 0));
  const mp::u64 diag[4] = {3, 7, 7, 30};
  for (std::size_t i = 0; i < 4; ++i) a[i][i] = diag[i];
  const mp::Vec c = mp::charpoly(a, p);
  for (const mp::u64 d : diag) CHECK(mp::poly_eval(c, d, p) == 0);
  CHECK(mp::poly_eval(c, 5, p) != 0);
}

TEST_CASE("reduced row echelon form") {
  const mp::u64 p = 7;
  mp::Mat a = {{1, 2, 3}, {2, 4, 6}, {1, 1, 1}};
  const auto pivots = mp::rref(a, p);
  REQUIRE(pivots == std::vector<std::size_t>{0, 1});
  // pivot block is the identity
  CHECK(a[0][0] == 1);
  CHECK(a[0][1] == 0);
  CHECK(a[1][0] == 0);
  CHECK(a[1][1] == 1);

  mp::Mat id = mp::identity_matrix(3);
  const auto full = mp::rref(id, p);
  CHECK(full == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("nullspace vectors are actual kernel vectors") {
  const mp::u64 p = 7;
  const mp::Mat a = {{1, 2, 3}, {2, 4, 6}, {1, 1, 1}};
  const auto basis = mp::nullspace(a, p);
  REQUIRE(basis.size() == 1);
  for (const auto& v : basis)
    for (const auto& row : a) {
      mp::u64 acc = 0;
      for (std::size_t j = 0; j < v.size(); ++j) acc = mp::add(acc, mp::mul(row[j], v[j], p), p);
      CHECK(acc == 0);
    }

  CHECK(mp::nullspace(mp::identity_matrix(4), p).empty());
  CHECK(mp::nullspace(mp::Mat(3, mp::Vec(3, 0)), p).size() == 3);
}
