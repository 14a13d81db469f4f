#pragma once

#include <cstdint>
#include <vector>

namespace reality::modp {

using u64 = std::uint64_t;

// Dense vectors/matrices over the prime field F_p, p < 2^32. Matrices are
// row-major vectors of rows; all entries are reduced residues.
using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

inline u64 add(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}

inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

inline u64 mul(u64 a, u64 b, u64 p) { return a * b % p; }

u64 pow(u64 a, u64 e, u64 p);

// Inverse of a nonzero residue (Fermat). Throws InternalError on 0.
u64 inv(u64 a, u64 p);

bool is_prime(u64 n);

Mat identity_matrix(std::size_t n);

// Reduces `m` in place to reduced row echelon form; returns the pivot
// column of each surviving row, in ascending order.
std::vector<std::size_t> rref(Mat& m, u64 p);

// Basis of the right nullspace {x : a*x = 0}, one vector per free column,
// in a deterministic order derived from the RREF.
std::vector<Vec> nullspace(Mat a, u64 p);

// Characteristic polynomial det(lambda*I - a), returned as coefficients
// c[0..n] with c[n] = 1. Uses a similarity reduction to Hessenberg form
// followed by the standard leading-minor recurrence; O(n^3) field ops.
Vec charpoly(Mat a, u64 p);

// Evaluates a polynomial given by coefficients c[0..n] at x (Horner).
u64 poly_eval(const Vec& c, u64 x, u64 p);

// Determinant by Gaussian elimination; independent of charpoly, used as a
// cross-check oracle in tests.
u64 det(Mat a, u64 p);

}  // namespace reality::modp
