#include "reality/fq.hpp"

#include <algorithm>

#include "reality/errors.hpp"

namespace reality {

namespace {

// Polynomials over F_p as little-endian coefficient vectors with no
// trailing zeros. Only used during field construction.
using Poly = std::vector<unsigned>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, unsigned p) {
  trim(a);
  while (a.size() >= m.size()) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - m.size();
    if (lead != 0) {
      // m is monic, so the quotient digit is just `lead`.
      for (std::size_t i = 0; i < m.size(); ++i) {
        unsigned& c = a[shift + i];
        c = (c + p - lead * m[i] % p) % p;
      }
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

bool divides(const Poly& d, Poly a, unsigned p) {
  return poly_mod(std::move(a), d, p).empty();
}

// Exhaustive trial division by every monic polynomial of degree 1..k/2.
bool is_irreducible(const Poly& m, unsigned p) {
  const std::size_t k = m.size() - 1;
  for (std::size_t d = 1; 2 * d <= k; ++d) {
    std::vector<unsigned> c(d, 0);  // candidate divisor: c_0..c_{d-1}, x^d monic
    while (true) {
      Poly cand(c.begin(), c.end());
      cand.push_back(1);
      if (divides(cand, m, p)) return false;
      std::size_t i = 0;
      while (i < d && ++c[i] == p) c[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

unsigned encode(const Poly& a, unsigned p) {
  unsigned v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
  return v;
}

Poly decode(unsigned v, unsigned p, unsigned k) {
  Poly a(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    a[i] = v % p;
    v /= p;
  }
  trim(a);
  return a;
}

}  // namespace

FqField::FqField(unsigned q) : q_(q) {
  if (q < 2 || q > 256) throw NotPrimePower("field size " + std::to_string(q) + " out of range");
  unsigned p = 0, k = 0, rest = q;
  for (unsigned d = 2; d <= rest; ++d) {
    if (rest % d == 0) {
      p = d;
      while (rest % d == 0) {
        rest /= d;
        ++k;
      }
      break;
    }
  }
  if (rest != 1) throw NotPrimePower(std::to_string(q) + " is not a prime power");
  p_ = p;
  k_ = k;

  if (k > 1) {
    // First irreducible monic polynomial of degree k in base-p counting order.
    for (unsigned low = 0;; ++low) {
      if (low >= q) throw NotPrimePower("no irreducible modulus found");  // unreachable
      Poly m = decode(low, p, k);
      m.resize(k, 0);
      m.push_back(1);
      if (is_irreducible(m, p)) {
        modulus_ = m;
        break;
      }
    }
  }

  add_.resize(std::size_t(q) * q);
  mul_.resize(std::size_t(q) * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  for (unsigned a = 0; a < q; ++a) {
    const Poly pa = decode(a, p, k);
    for (unsigned b = 0; b < q; ++b) {
      const Poly pb = decode(b, p, k);
      Poly s(std::max(pa.size(), pb.size()), 0);
      for (std::size_t i = 0; i < s.size(); ++i) {
        unsigned v = (i < pa.size() ? pa[i] : 0) + (i < pb.size() ? pb[i] : 0);
        s[i] = v % p;
      }
      trim(s);
      add_[std::size_t(a) * q + b] = std::uint16_t(encode(s, p));
      Poly prod(pa.size() + pb.size(), 0);
      for (std::size_t i = 0; i < pa.size(); ++i)
        for (std::size_t j = 0; j < pb.size(); ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
      trim(prod);
      if (k > 1) prod = poly_mod(std::move(prod), modulus_, p);
      mul_[std::size_t(a) * q + b] = std::uint16_t(encode(prod, p));
    }
  }
  for (unsigned a = 0; a < q; ++a) {
    Poly pa = decode(a, p, k);
    for (auto& c : pa) c = (p - c) % p;
    trim(pa);
    neg_[a] = std::uint16_t(encode(pa, p));
  }
  for (unsigned a = 1; a < q; ++a)
    for (unsigned b = 1; b < q; ++b)
      if (mul(a, b) == 1) {
        inv_[a] = std::uint16_t(b);
        break;
      }

  primitive_ = 0;
  for (unsigned a = 1; a < q; ++a)
    if (multiplicative_order(a) == q - 1) {
      primitive_ = a;
      break;
    }
}

unsigned FqField::inv(unsigned a) const {
  if (a == 0) throw InternalError("FqField::inv(0)");
  return inv_[a];
}

unsigned FqField::pow(unsigned a, std::uint64_t e) const {
  unsigned r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

unsigned FqField::multiplicative_order(unsigned a) const {
  if (a == 0) throw InternalError("multiplicative_order(0)");
  unsigned ord = 1, x = a;
  while (x != 1) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

std::string FqField::repr(unsigned a) const {
  if (k_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  const Poly digits = decode(a, p_, k_);
  std::string s;
  for (std::size_t i = digits.size(); i-- > 0;) {
    const unsigned c = digits[i];
    if (c == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(c);
    } else {
      if (c != 1) s += std::to_string(c) + "*";
      s += "t";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace reality
