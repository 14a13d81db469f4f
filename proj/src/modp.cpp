#include "reality/modp.hpp"

#include "reality/errors.hpp"

namespace reality::modp {

u64 pow(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 inv(u64 a, u64 p) {
  a %= p;
  if (a == 0) throw InternalError("modp::inv of zero residue");
  return pow(a, p - 2, p);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Mat identity_matrix(std::size_t n) {
  Mat m(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::vector<std::size_t> rref(Mat& m, u64 p) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && m[pr][c] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(m[pr], m[r]);
    const u64 s = inv(m[r][c], p);
    for (std::size_t j = c; j < cols; ++j) m[r][j] = mul(m[r][j], s, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const u64 f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = sub(m[i][j], mul(f, m[r][j], p), p);
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);  // drop zero rows
  return pivots;
}

std::vector<Vec> nullspace(Mat a, u64 p) {
  if (a.empty()) return {};
  const std::size_t cols = a[0].size();
  const std::vector<std::size_t> pivots = rref(a, p);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    Vec v(cols, 0);
    v[c] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = sub(0, a[i][c], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

u64 poly_eval(const Vec& c, u64 x, u64 p) {
  u64 r = 0;
  for (std::size_t i = c.size(); i-- > 0;) r = add(mul(r, x, p), c[i], p);
  return r;
}

namespace {

// In-place similarity reduction to upper Hessenberg form.
void hessenberg(Mat& a, u64 p) {
  const std::size_t n = a.size();
  if (n < 3) return;
  for (std::size_t c = 0; c + 2 < n; ++c) {
    std::size_t piv = c + 1;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) continue;
    if (piv != c + 1) {
      std::swap(a[piv], a[c + 1]);
      for (std::size_t i = 0; i < n; ++i) std::swap(a[i][piv], a[i][c + 1]);
    }
    const u64 pinv = inv(a[c + 1][c], p);
    for (std::size_t i = c + 2; i < n; ++i) {
      if (a[i][c] == 0) continue;
      const u64 f = mul(a[i][c], pinv, p);
      for (std::size_t j = c; j < n; ++j) a[i][j] = sub(a[i][j], mul(f, a[c + 1][j], p), p);
      for (std::size_t k = 0; k < n; ++k) a[k][c + 1] = add(a[k][c + 1], mul(f, a[k][i], p), p);
    }
  }
}

}  // namespace

Vec charpoly(Mat a, u64 p) {
  const std::size_t n = a.size();
  if (n == 0) return {1 % p};
  hessenberg(a, p);
  // q[m] = charpoly of the leading m-by-m block; expansion along the last
  // column of a Hessenberg matrix.
  std::vector<Vec> q(n + 1);
  q[0] = {1 % p};
  for (std::size_t m = 1; m <= n; ++m) {
    Vec cur(m + 1, 0);
    // (lambda - a[m-1][m-1]) * q[m-1]
    for (std::size_t i = 0; i < q[m - 1].size(); ++i) {
      cur[i + 1] = add(cur[i + 1], q[m - 1][i], p);
      cur[i] = sub(cur[i], mul(a[m - 1][m - 1], q[m - 1][i], p), p);
    }
    u64 subprod = 1;  // product of subdiagonal entries a[j][j-1], j = i+1..m-1
    for (std::size_t i = m - 1; i-- > 0;) {
      subprod = mul(subprod, a[i + 1][i], p);
      if (subprod == 0) break;
      const u64 f = mul(a[i][m - 1], subprod, p);
      if (f == 0) continue;
      for (std::size_t j = 0; j < q[i].size(); ++j) cur[j] = sub(cur[j], mul(f, q[i][j], p), p);
    }
    q[m] = std::move(cur);
  }
  return q[n];
}

u64 det(Mat a, u64 p) {
  const std::size_t n = a.size();
  u64 d = 1 % p;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      d = sub(0, d, p);
    }
    d = mul(d, a[c][c], p);
    const u64 pinv = inv(a[c][c], p);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      const u64 f = mul(a[i][c], pinv, p);
      for (std::size_t j = c; j < n; ++j) a[i][j] = sub(a[i][j], mul(f, a[c][j], p), p);
    }
  }
  return d;
}

}  // namespace reality::modp
