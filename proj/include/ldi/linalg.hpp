#pragma once

// Exact linear algebra: row reduction over Z_p, and fraction-free
// (Bareiss) / rational elimination over Q. No floating point.

#include "ldi/arith.hpp"

#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ldi {

using IntMatrix = std::vector<std::vector<Int>>;
using BigMatrix = std::vector<std::vector<BigInt>>;

struct EchelonMod {
  IntMatrix rows;                    // nonzero rows of the reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each row
  Int p = 2;

  std::size_t rank() const { return rows.size(); }

  /// Reduce v against the echelon rows; zero result ⟺ v in the row span.
  std::vector<Int> residual(std::vector<Int> v) const {
    for (auto& e : v) e = mod(e, p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Int c = v[pivots[r]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        v[j] = mod(v[j] - mul_mod(c, rows[r][j], p), p);
    }
    return v;
  }

  bool contains(const std::vector<Int>& v) const {
    for (Int e : residual(v))
      if (e != 0) return false;
    return true;
  }
};

/// Reduced row echelon form mod prime p.
inline EchelonMod rref_mod(IntMatrix a, Int p) {
  EchelonMod out;
  out.p = p;
  if (a.empty()) return out;
  const std::size_t cols = a.front().size();
  for (auto& row : a)
    for (auto& e : row) e = mod(e, p);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[r], a[piv]);
    const Int inv = inverse_mod(a[r][c], p);
    for (auto& e : a[r]) e = mul_mod(e, inv, p);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Int f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = mod(a[i][j] - mul_mod(f, a[r][j], p), p);
    }
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

inline std::size_t rank_mod(IntMatrix a, Int p) { return rref_mod(std::move(a), p).rank(); }

/// Basis of {v : a·v = 0 mod p}.
inline IntMatrix nullspace_mod(const IntMatrix& a, std::size_t cols, Int p) {
  const EchelonMod e = rref_mod(a, p);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  IntMatrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Int> v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = mod(-e.rows[r][f], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline BigMatrix to_big(const IntMatrix& a) {
  BigMatrix b(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) b[i].assign(a[i].begin(), a[i].end());
  return b;
}

/// Determinant of a square integer matrix by Bareiss fraction-free elimination.
inline BigInt determinant(BigMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

inline BigInt determinant(const IntMatrix& a) { return determinant(to_big(a)); }

/// Rank over Q by Bareiss elimination.
inline std::size_t rank_rational(BigMatrix a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a.front().size();
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

inline std::size_t rank_rational(const IntMatrix& a) { return rank_rational(to_big(a)); }

/// Basis of the rational null space {v : a·v = 0}, each vector scaled to a
/// primitive integer vector (gcd 1, first nonzero entry positive).
inline std::vector<std::vector<BigInt>> nullspace_rational(const IntMatrix& a, std::size_t cols) {
  std::vector<std::vector<Rational>> m(a.size(), std::vector<Rational>(cols));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    const Rational inv = 1 / m[r][c];
    for (auto& e : m[r]) e *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::vector<BigInt>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
    BigInt lcm = 1;
    for (const auto& e : v) lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(e));
    std::vector<BigInt> iv(cols);
    BigInt g = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      iv[j] = boost::multiprecision::numerator(Rational(v[j] * lcm));
      g = boost::multiprecision::gcd(g, iv[j]);
    }
    for (auto& e : iv) e /= g;
    for (const auto& e : iv) {
      if (e == 0) continue;
      if (e < 0)
        for (auto& x : iv) x = -x;
      break;
    }
    basis.push_back(std::move(iv));
  }
  return basis;
}

inline Int narrow(const BigInt& v) {
  if (v > BigInt(std::numeric_limits<Int>::max()) || v < BigInt(std::numeric_limits<Int>::min()))
    throw overflow_error("value does not fit in 64 bits");
  return static_cast<Int>(v);
}

}  // namespace ldi
